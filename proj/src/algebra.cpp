#include "qhh/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qhh {

const char* word_name(Word w) {
  switch (w) {
    case Word::identity: return "e";
    case Word::x: return "x";
    case Word::y: return "y";
    case Word::xy: return "xy";
  }
  return "?";
}

std::optional<WordProduct> word_product(Word a, Word b) {
  if (a == Word::identity) return WordProduct{b, 1};
  if (b == Word::identity) return WordProduct{a, 1};
  if (a == Word::x && b == Word::y) return WordProduct{Word::xy, 1};
  if (a == Word::y && b == Word::x) return WordProduct{Word::xy, -1};
  return std::nullopt;  // x*x, y*y and anything of degree >= 3 vanish
}

Algebra::Algebra(std::uint32_t s, FieldSpec field) : s_(s), field_(field) {
  if (s == 0) throw std::invalid_argument("the quiver needs at least one vertex");
  basis_.reserve(dimension());
  for (std::uint32_t v = 0; v < s_; ++v)
    for (Word w : {Word::identity, Word::x, Word::y, Word::xy})
      basis_.push_back({v, w});
}

std::size_t Algebra::basis_index(const BasisElement& b) const {
  return std::size_t{b.vertex} * 4 + static_cast<std::size_t>(b.word);
}

std::uint32_t Algebra::reduce_vertex(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(s_);
  if (r < 0) r += s_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Algebra::terminus(const BasisElement& b) const {
  return reduce_vertex(static_cast<std::int64_t>(b.vertex) + word_degree(b.word));
}

std::vector<Word> Algebra::corner_words(std::uint64_t n) const {
  if (s_ == 1) return {Word::identity, Word::x, Word::y, Word::xy};
  if (s_ == 2) {
    if (n % 2 == 0) return {Word::identity, Word::xy};
    return {Word::x, Word::y};
  }
  switch (n % s_) {
    case 0: return {Word::identity};
    case 1: return {Word::x, Word::y};
    case 2: return {Word::xy};
    default: return {};
  }
}

std::vector<BasisElement> Algebra::corner_basis(std::uint32_t i, std::uint64_t n) const {
  if (i >= s_) throw std::out_of_range("vertex out of range");
  std::vector<BasisElement> out;
  for (Word w : corner_words(n)) out.push_back({i, w});
  return out;
}

std::array<BasisElement, 4> Algebra::basis_ending_at(std::uint32_t v) const {
  const auto iv = static_cast<std::int64_t>(v);
  return {BasisElement{reduce_vertex(iv), Word::identity},
          BasisElement{reduce_vertex(iv - 1), Word::x},
          BasisElement{reduce_vertex(iv - 1), Word::y},
          BasisElement{reduce_vertex(iv - 2), Word::xy}};
}

std::array<BasisElement, 4> Algebra::basis_starting_at(std::uint32_t v) const {
  return {BasisElement{v, Word::identity}, BasisElement{v, Word::x},
          BasisElement{v, Word::y}, BasisElement{v, Word::xy}};
}

std::optional<std::pair<BasisElement, int>> basis_product(const Algebra& a,
                                                          const BasisElement& u,
                                                          const BasisElement& v) {
  if (a.terminus(u) != v.vertex) return std::nullopt;
  const auto wp = word_product(u.word, v.word);
  if (!wp) return std::nullopt;
  return std::pair{BasisElement{u.vertex, wp->word}, wp->sign};
}

AlgebraElement AlgebraElement::from_basis(const Algebra& a, const BasisElement& b) {
  AlgebraElement e{a};
  e.add_term(b, Scalar::one(a.field()));
  return e;
}

AlgebraElement AlgebraElement::unit(const Algebra& a) {
  AlgebraElement e{a};
  for (std::uint32_t v = 0; v < a.vertex_count(); ++v)
    e.add_term({v, Word::identity}, Scalar::one(a.field()));
  return e;
}

AlgebraElement AlgebraElement::arrow_sum_x(const Algebra& a) {
  AlgebraElement e{a};
  for (std::uint32_t v = 0; v < a.vertex_count(); ++v)
    e.add_term({v, Word::x}, Scalar::one(a.field()));
  return e;
}

AlgebraElement AlgebraElement::arrow_sum_y(const Algebra& a) {
  AlgebraElement e{a};
  for (std::uint32_t v = 0; v < a.vertex_count(); ++v)
    e.add_term({v, Word::y}, Scalar::one(a.field()));
  return e;
}

Scalar AlgebraElement::coefficient(const BasisElement& b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? Scalar::zero(algebra_->field()) : it->second;
}

bool AlgebraElement::in_radical() const {
  for (const auto& [b, c] : coeffs_)
    if (word_degree(b.word) == 0) return false;
  return true;
}

void AlgebraElement::add_term(const BasisElement& b, const Scalar& c) {
  if (b.vertex >= algebra_->vertex_count()) throw std::out_of_range("vertex out of range");
  if (c.is_zero()) return;
  auto it = coeffs_.find(b);
  if (it == coeffs_.end()) {
    coeffs_.emplace(b, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void AlgebraElement::check_same_algebra(const AlgebraElement& o) const {
  if (!(*algebra_ == *o.algebra_))
    throw std::invalid_argument("elements from different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same_algebra(o);
  for (const auto& [b, c] : o.coeffs_) add_term(b, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same_algebra(o);
  for (const auto& [b, c] : o.coeffs_) add_term(b, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement e{*algebra_};
  for (const auto& [b, c] : coeffs_) e.add_term(b, -c);
  return e;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement e{*algebra_};
  for (const auto& [b, v] : coeffs_) e.add_term(b, v * c);
  return e;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same_algebra(o);
  AlgebraElement p{*algebra_};
  for (const auto& [u, cu] : coeffs_) {
    for (const auto& [v, cv] : o.coeffs_) {
      if (auto prod = basis_product(*algebra_, u, v)) {
        Scalar c = cu * cv;
        if (prod->second < 0) c = -c;
        p.add_term(prod->first, c);
      }
    }
  }
  return p;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return *a.algebra_ == *b.algebra_ && a.coeffs_ == b.coeffs_;
}

std::string AlgebraElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")e" << b.vertex;
    if (b.word != Word::identity) os << "*" << word_name(b.word);
  }
  return os.str();
}

AlgebraElement sandwich(const BasisElement& l, const AlgebraElement& v,
                        const BasisElement& r) {
  const Algebra& a = v.algebra();
  AlgebraElement out{a};
  for (const auto& [b, c] : v.coefficients()) {
    const auto lb = basis_product(a, l, b);
    if (!lb) continue;
    const auto lbr = basis_product(a, lb->first, r);
    if (!lbr) continue;
    Scalar coeff = c;
    if (lb->second * lbr->second < 0) coeff = -coeff;
    out.add_term(lbr->first, coeff);
  }
  return out;
}

}  // namespace qhh
