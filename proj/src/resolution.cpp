#include "qhh/resolution.hpp"

#include <sstream>
#include <stdexcept>

#include "qhh/elimination.hpp"

namespace qhh {

std::vector<GeneratorIndex> generators(std::uint32_t s, std::uint32_t degree) {
  std::vector<GeneratorIndex> out;
  out.reserve(generator_count(s, degree));
  for (std::uint32_t v = 0; v < s; ++v)
    for (std::uint32_t j = 0; j <= degree; ++j) out.push_back({degree, v, j});
  return out;
}

namespace {

constexpr std::uint32_t kMaxExpandedDegree = 12;  // 2^n words per generator

void add_words(std::map<std::uint64_t, std::int64_t>& dst,
               const std::map<std::uint64_t, std::int64_t>& src, std::uint64_t or_mask,
               int shift) {
  for (const auto& [w, c] : src) {
    const std::uint64_t nw = (shift ? (w << 1) : w) | or_mask;
    auto it = dst.find(nw);
    if (it == dst.end())
      dst.emplace(nw, c);
    else if ((it->second += c) == 0)
      dst.erase(it);
  }
}

}  // namespace

std::vector<ExpandedGenerator> expanded_generators(std::uint32_t degree, std::uint32_t s) {
  if (s == 0) throw std::invalid_argument("need s >= 1");
  if (degree > kMaxExpandedDegree)
    throw std::invalid_argument("expansion materialization is exponential; degree capped at 12");

  // Degree 0: the idempotent at each vertex (empty word).
  std::vector<ExpandedGenerator> level(s);
  for (std::uint32_t v = 0; v < s; ++v) level[v] = {0, v, 0, {{0, 1}}};

  auto at = [&](const std::vector<ExpandedGenerator>& lv, std::uint32_t n, std::uint32_t v,
                std::uint32_t j) -> const ExpandedGenerator& {
    return lv[std::size_t{v} * (n + 1) + j];
  };

  for (std::uint32_t n = 1; n <= degree; ++n) {
    std::vector<ExpandedGenerator> next(generator_count(s, n));
    for (std::uint32_t v = 0; v < s; ++v) {
      for (std::uint32_t j = 0; j <= n; ++j) {
        ExpandedGenerator g{n, v, j, {}};
        // Append an x to the (v, j-1) expansion, a y to the (v, j) one.
        const std::uint64_t xbit = 1ull << (n - 1);
        if (j >= 1) add_words(g.words, at(level, n - 1, v, j - 1).words, xbit, 0);
        if (j <= n - 1) add_words(g.words, at(level, n - 1, v, j).words, 0, 0);
        next[std::size_t{v} * (n + 1) + j] = std::move(g);
      }
    }
    level = std::move(next);
  }
  return level;
}

bool left_recursion_holds(std::span<const ExpandedGenerator> lower,
                          std::span<const ExpandedGenerator> upper, std::uint32_t s) {
  if (upper.empty()) return true;
  const std::uint32_t n = upper[0].degree;
  if (n == 0 || lower.size() != generator_count(s, n - 1) ||
      upper.size() != generator_count(s, n))
    return false;

  auto at = [&](std::span<const ExpandedGenerator> lv, std::uint32_t deg, std::uint32_t v,
                std::uint32_t j) -> const ExpandedGenerator& {
    return lv[std::size_t{v} * (deg + 1) + j];
  };

  for (std::uint32_t v = 0; v < s; ++v) {
    const std::uint32_t v1 = (v + 1) % s;
    for (std::uint32_t j = 0; j <= n; ++j) {
      // Prepend y to the shifted (v+1, j) expansion and x to (v+1, j-1).
      std::map<std::uint64_t, std::int64_t> expect;
      if (j <= n - 1) add_words(expect, at(lower, n - 1, v1, j).words, 0, 1);
      if (j >= 1) add_words(expect, at(lower, n - 1, v1, j - 1).words, 1, 1);
      if (expect != at(upper, n, v, j).words) return false;
    }
  }
  return true;
}

bool left_recursion_holds(std::uint32_t degree, std::uint32_t s) {
  if (degree == 0) return true;
  const auto lower = expanded_generators(degree - 1, s);
  const auto upper = expanded_generators(degree, s);
  return left_recursion_holds(lower, upper, s);
}

void BimoduleElement::add_term(const GeneratorIndex& g, const BasisElement& left,
                               const BasisElement& right, const Scalar& c) {
  if (g.degree != degree_) throw std::invalid_argument("generator degree mismatch");
  if (g.x_count > g.degree || g.vertex >= algebra_->vertex_count())
    throw std::invalid_argument("generator index out of range");
  if (algebra_->terminus(left) != g.vertex)
    throw std::invalid_argument("left factor does not end at the generator");
  if (right.vertex != algebra_->reduce_vertex(std::int64_t{g.vertex} + g.degree))
    throw std::invalid_argument("right factor does not start at the generator's end");
  if (c.is_zero()) return;
  const Key k{g, left, right};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BimoduleElement& BimoduleElement::operator+=(const BimoduleElement& o) {
  if (degree_ != o.degree_ || !(*algebra_ == *o.algebra_))
    throw std::invalid_argument("bimodule elements from different modules");
  for (const auto& [k, c] : o.terms_) add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
  return *this;
}

BimoduleElement& BimoduleElement::operator-=(const BimoduleElement& o) {
  if (degree_ != o.degree_ || !(*algebra_ == *o.algebra_))
    throw std::invalid_argument("bimodule elements from different modules");
  for (const auto& [k, c] : o.terms_) add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
  return *this;
}

BimoduleElement BimoduleElement::sandwiched(const BasisElement& l, const BasisElement& r,
                                            const Scalar& c) const {
  BimoduleElement out{*algebra_, degree_};
  for (const auto& [k, v] : terms_) {
    const auto& [g, tl, tr] = k;
    const auto pl = basis_product(*algebra_, l, tl);
    if (!pl) continue;
    const auto pr = basis_product(*algebra_, tr, r);
    if (!pr) continue;
    Scalar coeff = v * c;
    if (pl->second * pr->second < 0) coeff = -coeff;
    out.add_term(g, pl->first, pr->first, coeff);
  }
  return out;
}

bool operator==(const BimoduleElement& a, const BimoduleElement& b) {
  return a.degree_ == b.degree_ && *a.algebra_ == *b.algebra_ && a.terms_ == b.terms_;
}

void BimoduleMap::set_image(const GeneratorIndex& g, BimoduleElement img) {
  if (g.degree != source_ || img.degree() != target_)
    throw std::invalid_argument("image degree mismatch");
  images_.insert_or_assign(g, std::move(img));
}

const BimoduleElement& BimoduleMap::image(const GeneratorIndex& g) const {
  auto it = images_.find(g);
  return it != images_.end() ? it->second : empty_;
}

BimoduleElement BimoduleMap::apply(const BimoduleElement& e) const {
  if (e.degree() != source_) throw std::invalid_argument("applying map to wrong degree");
  BimoduleElement out{*algebra_, target_};
  for (const auto& [k, c] : e.terms()) {
    const auto& [g, l, r] = k;
    out += image(g).sandwiched(l, r, c);
  }
  return out;
}

BimoduleMap boundary_map(const Algebra& a, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("degree-0 boundary is the augmentation; use contract");
  BimoduleMap d{a, n, n - 1};
  const Scalar plus = Scalar::one(a.field());
  const Scalar sign = (n % 2 == 0) ? plus : -plus;  // (-1)^n on the prepend side
  for (const auto& g : generators(a.vertex_count(), n)) {
    const std::uint32_t i = g.vertex, j = g.x_count;
    const std::uint32_t i1 = a.reduce_vertex(std::int64_t{i} + 1);
    const std::uint32_t end_prev = a.reduce_vertex(std::int64_t{i} + n - 1);
    const std::uint32_t end = a.reduce_vertex(std::int64_t{i} + n);
    BimoduleElement img{a, n - 1};
    const BasisElement id_i{i, Word::identity};
    const BasisElement id_end{end, Word::identity};
    if (j >= 1)  // append x
      img.add_term({n - 1, i, j - 1}, id_i, {end_prev, Word::x}, plus);
    if (j <= n - 1)  // append y
      img.add_term({n - 1, i, j}, id_i, {end_prev, Word::y}, plus);
    if (j <= n - 1)  // prepend y
      img.add_term({n - 1, i1, j}, {i, Word::y}, id_end, sign);
    if (j >= 1)  // prepend x
      img.add_term({n - 1, i1, j - 1}, {i, Word::x}, id_end, sign);
    d.set_image(g, std::move(img));
  }
  return d;
}

AlgebraElement contract(const BimoduleElement& e) {
  if (e.degree() != 0) throw std::invalid_argument("contraction applies to degree 0");
  AlgebraElement out{e.algebra()};
  for (const auto& [k, c] : e.terms()) {
    const auto& [g, l, r] = k;
    if (auto p = basis_product(e.algebra(), l, r))
      out.add_term(p->first, p->second < 0 ? -c : c);
  }
  return out;
}

std::size_t tensor_dimension(std::uint32_t s, std::uint32_t degree) {
  return 16u * generator_count(s, degree);
}

std::size_t tensor_index(const Algebra& a, const GeneratorIndex& g, std::size_t left_slot,
                         std::size_t right_slot) {
  (void)a;
  return generator_ordinal(g) * 16 + left_slot * 4 + right_slot;
}

namespace {

// The four basis elements ending (or starting) at a vertex carry
// distinct words, so the tensor slot of an outer factor is its word tag.
std::size_t slot_of(const BasisElement& b) { return static_cast<std::size_t>(b.word); }

void write_column(Matrix& m, const BimoduleElement& img, std::size_t col) {
  const Algebra& a = img.algebra();
  for (const auto& [k, c] : img.terms()) {
    const auto& [g, l, r] = k;
    m.add_to(tensor_index(a, g, slot_of(l), slot_of(r)), col, c);
  }
}

}  // namespace

Matrix flatten(const BimoduleMap& map) {
  const Algebra& a = map.algebra();
  const std::uint32_t s = a.vertex_count();
  Matrix m{tensor_dimension(s, map.target_degree()), tensor_dimension(s, map.source_degree()),
           a.field()};
  for (const auto& g : generators(s, map.source_degree())) {
    const BimoduleElement img = map.image(g);
    const auto lefts = a.basis_ending_at(g.vertex);
    const auto rights = a.basis_starting_at(a.reduce_vertex(std::int64_t{g.vertex} + g.degree));
    for (std::size_t ls = 0; ls < 4; ++ls)
      for (std::size_t rs = 0; rs < 4; ++rs)
        write_column(m, img.sandwiched(lefts[ls], rights[rs], Scalar::one(a.field())),
                     tensor_index(a, g, ls, rs));
  }
  return m;
}

Matrix flatten_contraction(const Algebra& a) {
  const std::uint32_t s = a.vertex_count();
  Matrix m{a.dimension(), tensor_dimension(s, 0), a.field()};
  for (const auto& g : generators(s, 0)) {
    const auto lefts = a.basis_ending_at(g.vertex);
    const auto rights = a.basis_starting_at(g.vertex);
    for (std::size_t ls = 0; ls < 4; ++ls) {
      for (std::size_t rs = 0; rs < 4; ++rs) {
        if (auto p = basis_product(a, lefts[ls], rights[rs])) {
          Scalar c = Scalar::one(a.field());
          if (p->second < 0) c = -c;
          m.add_to(a.basis_index(p->first), tensor_index(a, g, ls, rs), c);
        }
      }
    }
  }
  return m;
}

CheckReport verify_complex(const Algebra& a, std::uint32_t N,
                           const std::vector<BimoduleMap>& maps) {
  CheckReport rep;
  if (maps.size() < N + 1) throw std::invalid_argument("need boundary maps up to degree N");
  for (std::uint32_t src = 1; src <= N; ++src) {
    for (const auto& g : generators(a.vertex_count(), src)) {
      bool zero;
      std::string what;
      if (src == 1) {
        zero = contract(maps[1].image(g)).is_zero();
        what = "augmented composite";
      } else {
        zero = maps[src - 1].apply(maps[src].image(g)).is_zero();
        what = "composite";
      }
      if (!zero) {
        std::ostringstream os;
        os << what << " nonzero at source degree " << src << ", generator (v=" << g.vertex
           << ", j=" << g.x_count << ")";
        rep.fail(os.str());
        return rep;
      }
    }
  }
  std::ostringstream os;
  os << "all composites vanish for source degrees 1.." << N;
  rep.note(os.str());
  return rep;
}

CheckReport verify_complex(const Algebra& a, std::uint32_t N) {
  std::vector<BimoduleMap> maps;
  maps.emplace_back(a, 0, 0);  // placeholder; index n holds the degree-n map
  for (std::uint32_t n = 1; n <= N; ++n) maps.push_back(boundary_map(a, n));
  return verify_complex(a, N, maps);
}

CheckReport verify_exact_and_minimal(const Algebra& a, std::uint32_t N) {
  CheckReport rep;
  if (N < 2) throw std::invalid_argument("need N >= 2 for the rank bookkeeping");
  const std::uint32_t s = a.vertex_count();

  const std::size_t r0 = rank(flatten_contraction(a));
  if (r0 != a.dimension()) {
    std::ostringstream os;
    os << "augmentation not onto: rank " << r0 << " != " << a.dimension();
    rep.fail(os.str());
  }

  std::vector<std::size_t> r(N + 1, 0);
  std::vector<bool> minimal(N + 1, true);
  for (std::uint32_t n = 1; n <= N; ++n) {
    const BimoduleMap d = boundary_map(a, n);
    for (const auto& g : generators(s, n))
      for (const auto& [k, c] : d.image(g).terms()) {
        (void)c;
        if (word_degree(std::get<1>(k).word) == 0 && word_degree(std::get<2>(k).word) == 0)
          minimal[n] = false;
      }
    r[n] = rank(flatten(d));
  }

  if (r[1] != tensor_dimension(s, 0) - a.dimension()) {
    std::ostringstream os;
    os << "exactness fails at the bottom: rank d1 = " << r[1] << ", expected "
       << tensor_dimension(s, 0) - a.dimension();
    rep.fail(os.str());
  }
  for (std::uint32_t n = 1; n + 1 <= N; ++n) {
    if (r[n] + r[n + 1] != tensor_dimension(s, n)) {
      std::ostringstream os;
      os << "exactness fails at degree " << n << ": " << r[n] << " + " << r[n + 1]
         << " != " << tensor_dimension(s, n);
      rep.fail(os.str());
    }
  }
  for (std::uint32_t n = 1; n <= N; ++n) {
    if (!minimal[n]) {
      std::ostringstream os;
      os << "minimality fails at degree " << n << ": an image term has both outer factors "
         << "of degree zero";
      rep.fail(os.str());
    }
  }
  if (rep.passed) {
    std::ostringstream os;
    os << "exact and minimal through degree " << N << " (ranks";
    for (std::uint32_t n = 1; n <= N; ++n) os << " " << r[n];
    os << ")";
    rep.note(os.str());
  }
  return rep;
}

}  // namespace qhh
