#include "sasmall/syntax.hpp"

#include <cctype>

namespace sasmall {

namespace {

std::string compact(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  fail(ErrorKind::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

bool all_digits(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_int(std::string_view s, bool allow_sign = true) {
  if (!all_digits(s, allow_sign)) bad("expected an integer", s);
  return Integer(std::string(s));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool strip(std::string& s, char open, char close) {
  if (s.size() >= 2 && s.front() == open && s.back() == close) {
    s = s.substr(1, s.size() - 2);
    return true;
  }
  return false;
}

IntMatrix parse_matrix(std::string s) {
  if (!strip(s, '[', ']')) bad("expected [[...]]", s);
  std::vector<std::vector<Integer>> rows;
  if (!s.empty())
    for (auto r : split(s, ',')) {
      if (!strip(r, '[', ']')) bad("expected a bracketed row", r);
      std::vector<Integer> row;
      if (!r.empty())
        for (const auto& x : split(r, ',')) row.push_back(parse_int(x));
      rows.push_back(std::move(row));
    }
  if (rows.empty()) bad("empty presentation", s);
  const auto cols = static_cast<Eigen::Index>(rows.front().size());
  IntMatrix a(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != cols) bad("ragged presentation matrix", s);
    for (Eigen::Index j = 0; j < cols; ++j) a(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return a;
}

}  // namespace

RingDesc parse_ring(std::string_view text) {
  const std::string s = compact(text);
  if (s == "Z") return RingDesc::integers();
  if (s.rfind("Z/", 0) == 0 || s.rfind("Z_", 0) == 0) {
    const Integer n = parse_int(s.substr(2), false);
    if (n < 2) fail(ErrorKind::BadRing, "Z/n requires n >= 2, got " + n.str());
    return RingDesc::finite(n);
  }
  bad("unknown ring", text);
}

Ideal parse_ideal(const RingDesc& ring, std::string_view text) {
  std::string s = compact(text);
  if (s == "0") return Ideal::zero(ring);
  if (s == "Z" || s == "R") return Ideal::unit(ring);
  if (const auto pos = s.find("mod"); pos != std::string::npos) {
    const Integer n = parse_int(s.substr(pos + 3), false);
    if (!ring.is_finite() || n != ring.modulus()) bad("ideal is not over this ring", text);
    s = s.substr(0, pos);
  }
  if (strip(s, '(', ')')) return Ideal(ring, parse_int(s));
  if (!s.empty() && s.back() == 'Z') return Ideal(ring, parse_int(s.substr(0, s.size() - 1)));
  return Ideal(ring, parse_int(s));
}

FGModule parse_module(const RingDesc& ring, std::string_view text) {
  std::string s = compact(text);
  if (s == "0") return module_make(ring, {});
  if (s.rfind("presented[", 0) == 0) return module_from_relations(ring, parse_matrix(s.substr(9)));
  if (s.rfind("presented:", 0) == 0) s = s.substr(10);
  if (s.empty()) bad("empty module", text);
  std::vector<Integer> rel_diag, scale;
  bool scaled = false;
  for (const auto& f : split(s, 'x')) {
    if (f.rfind("Z/", 0) == 0 || f.rfind("Z_", 0) == 0) {
      const Integer d = parse_int(f.substr(2), false);
      if (d < 1) fail(ErrorKind::BadFactors, "invalid invariant factor " + d.str());
      if (ring.is_finite() && ring.modulus() % d != 0)
        fail(ErrorKind::BadFactors, d.str() + " does not divide " + ring.modulus().str());
      rel_diag.push_back(d);
      scale.push_back(1);
    } else if (f == "Z") {
      rel_diag.push_back(0);
      scale.push_back(1);
    } else if (f.size() > 1 && f.back() == 'Z') {
      const Integer c = parse_int(f.substr(0, f.size() - 1), false);
      if (c < 1) bad("free factor scale must be positive", f);
      rel_diag.push_back(0);
      scale.push_back(c);
      scaled = scaled || c != 1;
    } else {
      bad("unknown module factor", f);
    }
  }
  if (!scaled) return module_make(ring, rel_diag);
  const auto k = static_cast<Eigen::Index>(rel_diag.size());
  IntMatrix rel = IntMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) rel(i, i) = rel_diag[static_cast<std::size_t>(i)];
  return module_from_relations(ring, rel, scale);
}

Element parse_element(const FGModule& m, std::string_view text) {
  std::string s = compact(text);
  std::vector<Integer> coords;
  if (strip(s, '(', ')')) {
    if (!s.empty())
      for (const auto& c : split(s, ',')) coords.push_back(parse_int(c));
  } else {
    coords.push_back(parse_int(s));
  }
  return element_from_user(m, coords);
}

Submodule parse_submodule(const FGModule& m, std::string_view text) {
  std::string s = compact(text);
  if (s == "0") return zero_submodule(m);
  if (s == "M") return full_submodule(m);
  if (m.is_z_line() && !s.empty() && s.back() == 'Z') {
    const std::string k = s.substr(0, s.size() - 1);
    return z_line_submodule(m, k.empty() ? Integer(1) : abs_value(parse_int(k)));
  }
  if (!strip(s, '<', '>')) bad("expected a generator list <...>", text);
  std::vector<Element> gens;
  if (!s.empty())
    for (const auto& g : split(s, ',')) gens.push_back(parse_element(m, g));
  return submodule_from_generators(m, gens);
}

}  // namespace sasmall
