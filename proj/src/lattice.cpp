#include "qtorus/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qtorus/quantum_torus.hpp"

namespace qtorus {

namespace {

void swap_rows(IntMat& m, long long i, long long j) { m.row(i).swap(m.row(j)); }
void swap_cols(IntMat& m, long long i, long long j) { m.col(i).swap(m.col(j)); }

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
  const long long rows = a.rows(), cols = a.cols();
  SmithResult res;
  res.s = a;
  res.u = IntMat::Identity(rows, rows);
  res.v = IntMat::Identity(cols, cols);
  IntMat& s = res.s;

  const long long rank_bound = std::min(rows, cols);
  for (long long t = 0; t < rank_bound; ++t) {
    // Find a pivot of minimal absolute value in the trailing submatrix.
    auto find_pivot = [&]() -> std::optional<std::pair<long long, long long>> {
      std::optional<std::pair<long long, long long>> best;
      long long best_abs = 0;
      for (long long i = t; i < rows; ++i)
        for (long long j = t; j < cols; ++j) {
          long long v = std::llabs(s(i, j));
          if (v != 0 && (!best || v < best_abs)) {
            best = {i, j};
            best_abs = v;
          }
        }
      return best;
    };

    for (;;) {
      auto piv = find_pivot();
      if (!piv) return res;  // trailing block zero; done
      auto [pi, pj] = *piv;
      if (pi != t) {
        swap_rows(s, pi, t);
        swap_rows(res.u, pi, t);
      }
      if (pj != t) {
        swap_cols(s, pj, t);
        swap_cols(res.v, pj, t);
      }
      bool clean = true;
      for (long long i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        long long qq = floor_div(s(i, t), s(t, t));
        s.row(i) -= qq * s.row(t);
        res.u.row(i) -= qq * res.u.row(t);
        if (s(i, t) != 0) clean = false;
      }
      for (long long j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        long long qq = floor_div(s(t, j), s(t, t));
        s.col(j) -= qq * s.col(t);
        res.v.col(j) -= qq * res.v.col(t);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold in any non-divisible entry and repeat.
      bool divides_all = true;
      for (long long i = t + 1; i < rows && divides_all; ++i)
        for (long long j = t + 1; j < cols && divides_all; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.row(t) += s.row(i);
            res.u.row(t) += res.u.row(i);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      res.u.row(t) = -res.u.row(t);
    }
  }
  return res;
}

IntMat hermite_normal_form(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermite_normal_form: square input");
  const long long d = a.rows();
  IntMat h = a;
  for (long long i = 0; i < d; ++i) {
    // Euclid over the entries of row i, columns >= i.
    for (;;) {
      long long best = -1, best_abs = 0;
      for (long long j = i; j < d; ++j) {
        long long v = std::llabs(h(i, j));
        if (v != 0 && (best < 0 || v < best_abs)) {
          best = j;
          best_abs = v;
        }
      }
      if (best < 0) throw std::invalid_argument("hermite_normal_form: rank deficient");
      if (best != i) swap_cols(h, best, i);
      bool clean = true;
      for (long long j = i + 1; j < d; ++j) {
        if (h(i, j) == 0) continue;
        long long qq = floor_div(h(i, j), h(i, i));
        h.col(j) -= qq * h.col(i);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(i, i) < 0) h.col(i) = -h.col(i);
    // Reduce earlier columns in this row into [0, h(i,i)).
    for (long long j = 0; j < i; ++j) {
      long long qq = floor_div(h(i, j), h(i, i));
      if (qq != 0) h.col(j) -= qq * h.col(i);
    }
  }
  return h;
}

long long det_lower_triangular(const IntMat& h) {
  long long det = 1;
  for (long long i = 0; i < h.rows(); ++i) det *= h(i, i);
  return det;
}

bool RadicalData::contains(const IntVec& n) const {
  IntVec x = n;
  for (long long j = 0; j < d; ++j) {
    if (x[j] % xi_basis(j, j) != 0) return false;
    long long c = x[j] / xi_basis(j, j);
    if (c != 0) x -= c * xi_basis.col(j);
  }
  return true;
}

IntVec RadicalData::coords(const IntVec& r) const {
  IntVec x = r;
  IntVec gamma(d);
  for (long long j = 0; j < d; ++j) {
    if (x[j] % xi_basis(j, j) != 0)
      throw std::invalid_argument("RadicalData::coords: vector not in Rad(f)");
    gamma[j] = x[j] / xi_basis(j, j);
    if (gamma[j] != 0) x -= gamma[j] * xi_basis.col(j);
  }
  return gamma;
}

IntVec RadicalData::reduce(const IntVec& n) const {
  IntVec x = n;
  for (long long j = 0; j < d; ++j) {
    long long c = floor_div(x[j], xi_basis(j, j));
    if (c != 0) x -= c * xi_basis.col(j);
  }
  return x;
}

long long RadicalData::coset_index(const IntVec& n) const {
  IntVec x = reduce(n);
  long long idx = 0, stride = 1;
  for (long long j = 0; j < d; ++j) {
    idx += x[j] * stride;
    stride *= xi_basis(j, j);
  }
  return idx;
}

long long RadicalData::xi_norm(const IntVec& r) const {
  IntVec gamma = coords(r);
  long long s = 0;
  for (long long j = 0; j < d; ++j) s += std::llabs(gamma[j]);
  return s;
}

long long xi_norm(const IntVec& r, const RadicalData& rad) { return rad.xi_norm(r); }

std::vector<IntVec> gamma_cosets(const RadicalData& rad) { return rad.delta; }

RadicalData radical_basis(const QMatrix& q) {
  const long long d = q.dim();
  const long long level = q.level();
  RadicalData rad;
  rad.d = d;

  // Rad(f) = { n : A^T n == 0 (mod L) }.  With U A^T V = S diagonal, the
  // condition reads s_i y_i == 0 (mod L) for y = V^{-1} n, so Rad(f) is
  // spanned by the columns of V * diag(L / gcd(s_i, L)).
  SmithResult snf = smith_normal_form(IntMat(q.exponents().transpose()));
  IntMat basis(d, d);
  for (long long i = 0; i < d; ++i) {
    long long s = i < snf.s.rows() && i < snf.s.cols() ? snf.s(i, i) : 0;
    long long c = level / gcd_ll(s == 0 ? level : s, level);
    if (s == 0) c = 1;  // no condition on this coordinate
    basis.col(i) = c * snf.v.col(i);
  }
  rad.xi_basis = hermite_normal_form(basis);

  // Gamma invariants from the Smith form of the basis.
  SmithResult gq = smith_normal_form(rad.xi_basis);
  std::vector<long long> factors;
  for (long long i = 0; i < d; ++i)
    if (gq.s(i, i) > 1) factors.push_back(gq.s(i, i));
  std::sort(factors.begin(), factors.end(), std::greater<>());
  if (factors.size() % 2 != 0)
    throw std::logic_error("radical_basis: Gamma factors do not pair (form not alternating?)");
  for (size_t i = 0; i < factors.size(); i += 2) {
    if (factors[i] != factors[i + 1])
      throw std::logic_error("radical_basis: Gamma factors do not pair");
    rad.invariants_k.push_back(factors[i]);
  }
  rad.z = static_cast<long long>(rad.invariants_k.size());
  rad.n_value = 1;
  for (long long k : rad.invariants_k) rad.n_value *= k;

  // Coset representatives: the box prod [0, H_jj), fastest index first, so
  // delta[0] == 0 and delta[rad.coset_index(n)] is the representative of n.
  long long count = det_lower_triangular(rad.xi_basis);
  rad.delta.reserve(count);
  IntVec cur = IntVec::Zero(d);
  for (long long idx = 0; idx < count; ++idx) {
    rad.delta.push_back(cur);
    for (long long j = 0; j < d; ++j) {
      if (++cur[j] < rad.xi_basis(j, j)) break;
      cur[j] = 0;
    }
  }
  return rad;
}

namespace {

// Congruence operations tracking P with M = P^T A P.
struct SkewReduction {
  IntMat m;
  IntMat p;

  void do_swap(long long i, long long j) {
    m.row(i).swap(m.row(j));
    m.col(i).swap(m.col(j));
    p.col(i).swap(p.col(j));
  }
  void do_addmul(long long i, long long j, long long c) {  // row/col i += c * row/col j
    m.row(i) += c * m.row(j);
    m.col(i) += c * m.col(j);
    p.col(i) += c * p.col(j);
  }
  void do_negate(long long i) {
    m.row(i) = -m.row(i);
    m.col(i) = -m.col(i);
    p.col(i) = -p.col(i);
  }
};

// Skew-symmetric Smith reduction: P^T A P block-diagonal with blocks
// [[0, -b],[b, 0]], b_1 | b_2 | ... ; zero block last.
void skew_normal_form(SkewReduction& red) {
  const long long d = red.m.rows();
  long long t = 0;
  while (t + 1 < d) {
    // Minimal nonzero entry in the trailing submatrix.
    long long pi = -1, pj = -1, best = 0;
    for (long long i = t; i < d; ++i)
      for (long long j = t; j < d; ++j) {
        long long v = std::llabs(red.m(i, j));
        if (v != 0 && (pi < 0 || v < best)) {
          pi = i;
          pj = j;
          best = v;
        }
      }
    if (pi < 0) break;  // zero block
    // Move the pivot to (t, t+1).
    if (pi == t + 1 && pj == t) red.do_swap(t, t + 1);
    else {
      if (pi != t) red.do_swap(pi, t);
      if (pj == t) pj = pi;  // swapped away
      if (pj != t + 1) red.do_swap(pj, t + 1);
    }
    bool clean = true;
    long long b = red.m(t, t + 1);
    for (long long k = t + 2; k < d && clean; ++k) {
      if (red.m(t, k) != 0) {
        long long qq = floor_div(red.m(t, k), b);
        red.do_addmul(k, t + 1, -qq);
        if (red.m(t, k) != 0) clean = false;
      }
      if (clean && red.m(t + 1, k) != 0) {
        long long qq = floor_div(red.m(t + 1, k), -b);
        red.do_addmul(k, t, -qq);
        if (red.m(t + 1, k) != 0) clean = false;
      }
    }
    if (!clean) continue;  // smaller entries appeared; re-pivot
    // Block [t, t+1] is split off; fix sign so m(t+1, t) > 0.
    if (red.m(t + 1, t) < 0) red.do_negate(t);
    t += 2;
  }
  // Divisibility chain across blocks.
  for (;;) {
    bool fixed = true;
    for (long long i = 0; i + 3 < d; i += 2) {
      long long b1 = red.m(i + 1, i);
      long long b2 = red.m(i + 3, i + 2);
      if (b1 != 0 && b2 != 0 && b2 % b1 != 0) {
        red.do_addmul(i, i + 2, 1);  // couple the blocks and re-reduce
        skew_normal_form(red);
        fixed = false;
        break;
      }
    }
    if (fixed) break;
  }
}

}  // namespace

std::pair<QMatrix, IntMat> normalize_q(const QMatrix& q) {
  const long long d = q.dim();
  const long long level = q.level();

  // Integer skew lift of the exponent matrix mod L.
  SkewReduction red;
  red.m = IntMat::Zero(d, d);
  for (long long i = 0; i < d; ++i)
    for (long long j = i + 1; j < d; ++j) {
      long long e = mod_pos(q.exponents()(i, j), level);
      red.m(i, j) = e;
      red.m(j, i) = -e;
    }
  red.p = IntMat::Identity(d, d);
  skew_normal_form(red);

  // Sort blocks by the order of zeta^b mod L, descending; trivial blocks
  // (b == 0 mod L) become free coordinates at the end.
  struct Block {
    long long start;
    long long order;
  };
  std::vector<Block> blocks;
  for (long long i = 0; i + 1 < d; i += 2) {
    long long b = mod_pos(red.m(i + 1, i), level);
    long long order = b == 0 ? 1 : level / gcd_ll(b, level);
    blocks.push_back({i, order});
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) { return a.order > b.order; });
  // Apply the block permutation as simultaneous pair swaps.
  std::vector<long long> perm;  // new coordinate -> old coordinate
  for (const auto& blk : blocks) {
    perm.push_back(blk.start);
    perm.push_back(blk.start + 1);
  }
  if (d % 2 == 1) perm.push_back(d - 1);
  IntMat pp = IntMat::Zero(d, d);
  for (long long newc = 0; newc < d; ++newc) pp(perm[newc], newc) = 1;
  IntMat m_final = pp.transpose() * red.m * pp;
  IntMat p_final = red.p * pp;

  CycMat entries(d, d);
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j)
      entries(i, j) = CycScalar::root_of_unity(mod_pos(m_final(i, j), level), level);
  QMatrix q_std(entries);

  if (!check_f_conjugation(q, q_std, p_final, 3))
    throw std::logic_error("normalize_q: f-conjugation identity failed");
  return {q_std, p_final};
}

bool check_f_conjugation(const QMatrix& q, const QMatrix& q_std, const IntMat& p,
                         long long window) {
  const long long d = q.dim();
  IntVec n(d), m(d);
  BoxIterator ni(d, window);
  while (ni.next(n)) {
    BoxIterator mi(d, window);
    while (mi.next(m)) {
      if (q_std.f_form(n, m) != q.f_form(IntVec(p * n), IntVec(p * m))) return false;
    }
  }
  return true;
}

BoxIterator::BoxIterator(long long d, long long radius)
    : d_(d), radius_(radius), cur_(d, -radius) {}

bool BoxIterator::next(IntVec& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
  } else {
    long long j = 0;
    for (; j < d_; ++j) {
      if (++cur_[j] <= radius_) break;
      cur_[j] = -radius_;
    }
    if (j == d_) {
      done_ = true;
      return false;
    }
  }
  out.resize(d_);
  for (long long j = 0; j < d_; ++j) out[j] = cur_[j];
  return true;
}

std::vector<IntVec> box_points(long long d, long long radius) {
  std::vector<IntVec> pts;
  IntVec n(d);
  BoxIterator it(d, radius);
  while (it.next(n)) pts.push_back(n);
  return pts;
}

}  // namespace qtorus
