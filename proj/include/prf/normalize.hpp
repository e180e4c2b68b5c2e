#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prf/ratfunc.hpp"

namespace prf {

// Maps W to (y V(x+b) + c z U(x+b)) / (z U(x+b)) = (y/z) W(x+b) + c.
struct NormWitness {
  Elem y = FieldCtx::one();
  Elem z = FieldCtx::one();
  Elem b{};
  Elem c{};

  friend bool operator==(const NormWitness&, const NormWitness&) = default;
};

// C: p does not divide u, b_{u-1} = 0.
// M: p | u, p > 2, b_{u-1} = 0 or b_{u-2} = 0.
// B: p = 2, 2^i <= u <= 2^{i+1}-3, r = 2^i-1, b_r = 0 or b_{r-1} = 0.
// Basic: no denominator condition; only monic V, U and V(0) = 0. Never
// returned by classify; the census uses it for shapes without one of the
// three kinds above.
enum class NormKind { C, M, B, Basic };

enum class NotNormalizableReason {
  NotProper,          // v <= u
  ConstantDenominator,  // u = 0
  ExceptionalDegree,  // p = 2 and u = 2^i - 2
  SmallExtension,     // p = 2 and m <= 2
};

struct NotNormalizable {
  NotNormalizableReason reason;
};

struct ExceptionalDegree {};

std::string kind_name(NormKind kind);
std::string reason_name(NotNormalizableReason reason);

std::variant<NormKind, NotNormalizable> classify(const FieldCtx& ctx, unsigned v, unsigned u);

// r = 2^i - 1 for the B kind, where 2^i <= u < 2^{i+1}.
unsigned b_kind_index(unsigned u);

// The kind-specific zero-coefficient condition on a monic denominator.
bool kind_condition(const Poly& den, unsigned u, NormKind kind);

bool is_normalized(const FieldCtx& ctx, const RatFn& w, NormKind kind);

RatFn apply_witness(const FieldCtx& ctx, const RatFn& w, const NormWitness& nw);
NormWitness invert_witness(const FieldCtx& ctx, const NormWitness& nw);

// Normal form of the class member using shift b: monic numerator and
// denominator and V(0) = 0. Returns (normal form, witness taking it back to w),
// or nullopt when U(b) = 0.
std::optional<std::pair<RatFn, NormWitness>> normalize_at(const FieldCtx& ctx, const RatFn& w, Elem b);

// Each returns (normalized, witness) with apply_witness(normalized, witness) == w.
std::pair<RatFn, NormWitness> c_normalize(const FieldCtx& ctx, const RatFn& w);
std::pair<RatFn, NormWitness> m_normalize(const FieldCtx& ctx, const RatFn& w);
std::variant<std::pair<RatFn, NormWitness>, ExceptionalDegree> b_normalize(const FieldCtx& ctx, const RatFn& w);

// Every a W(x+b) + c with a != 0. Members are not deduplicated.
void for_each_class_member(const FieldCtx& ctx, const RatFn& w, const std::function<void(const RatFn&)>& fn);
std::vector<RatFn> class_members(const FieldCtx& ctx, const RatFn& w);

// Distinct normal forms of kind `kind` in the class of w, sorted.
std::vector<RatFn> normalized_forms(const FieldCtx& ctx, const RatFn& w, NormKind kind);

// Number of shifts b with a W(x+b) + c = W for some a, c.
unsigned stabilizer_size(const FieldCtx& ctx, const RatFn& w);

}  // namespace prf
