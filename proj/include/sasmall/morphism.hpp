#pragma once

#include <vector>

#include "sasmall/predicates.hpp"

namespace sasmall {

/// Module map x -> x * matrix in internal coordinates; row i is the image of
/// the i-th source generator.
class Hom {
 public:
  const FGModule& source() const { return source_; }
  const FGModule& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }
  bool is_epi() const { return epi_; }
  bool is_mono() const { return mono_; }

  Element apply(const Element& x) const;

  friend bool operator==(const Hom& a, const Hom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && same_matrix(a.matrix_, b.matrix_);
  }

 private:
  Hom(FGModule s, FGModule t, IntMatrix a) : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(a)) {}
  FGModule source_, target_;
  IntMatrix matrix_;
  bool epi_ = false, mono_ = false;

  friend Hom hom_make(const FGModule&, const FGModule&, const IntMatrix&);
};

/// Checks shape, ring and that source relations land in target relations;
/// NotWellDefined otherwise. Image entries are reduced modulo the target.
Hom hom_make(const FGModule& source, const FGModule& target, const IntMatrix& matrix);
Hom identity_hom(const FGModule& m);

Submodule kernel(const Hom& f);
Submodule image(const Hom& f);
Submodule preimage(const Hom& f, const Submodule& y);
Submodule push(const Hom& f, const Submodule& x);
/// g after f.
Hom compose(const Hom& g, const Hom& f);

struct Quotient {
  FGModule module;
  Hom projection;
};

/// M / N in Smith coordinates with unit factors dropped. Submodules of the
/// quotient correspond to submodules of M over N via preimage and push.
Quotient quotient_module(const FGModule& m, const Submodule& n);
Hom quotient_map(const FGModule& m, const Submodule& k);

struct DirectSum {
  FGModule module;
  Hom inject1, inject2, project1, project2;
};

DirectSum direct_sum(const FGModule& a, const FGModule& b);
Submodule sub_direct_sum(const Submodule& n1, const Submodule& n2);

/// R^k tensor M, realized as M^k.
FGModule tensor_with_free(const FGModule& m, int k);
/// R^k tensor N inside R^k tensor M, i.e. N^k.
Submodule tensor_submodule(const Submodule& n, int k);

struct Localization {
  FGModule module;         // S^-1 M over S^-1 R
  RingDesc local_ring;     // Z/m with m the part of n prime to S
  Hom map;                 // M -> M / K_S over the original ring
  Submodule kernel;        // K_S
  std::vector<Integer> s;  // closure of the generators, ascending
};

/// S^-1 M for a finite module over Z/n with S generated by `s_gens`;
/// NotMCS when the multiplicative closure contains 0.
Localization localize(const FGModule& m, const std::vector<Integer>& s_gens);
/// S^-1 N as a submodule of S^-1 M.
Submodule localize_submodule(const Localization& loc, const Submodule& n);
/// S^-1 I as an ideal of S^-1 R.
Ideal localize_ideal(const Localization& loc, const Ideal& i);

struct SubmoduleModule {
  FGModule module;
  Hom inclusion;  // module -> parent, image equal to the submodule
};

/// N with its induced module structure, presented on its own Hermite basis.
SubmoduleModule submodule_as_module(const Submodule& n);
/// f with its target cut down to f(M), as a module in its own right.
Hom corestrict(const Hom& f);

Verdict is_sa_small_epi(const Hom& f, const PredicateOptions& opts = {});
Verdict is_T_sa_small_epi(const Hom& f, const Submodule& t, const PredicateOptions& opts = {});

std::string to_string(const Hom& f);

}  // namespace sasmall
