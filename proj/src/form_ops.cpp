#include "lcklab/ops.hpp"

#include <map>
#include <mutex>

#include "lcklab/complex_structure.hpp"
#include "lcklab/conventions.hpp"

namespace lck {

const IndexTable& IndexTable::get(int m, int k) {
  static std::map<std::pair<int, int>, IndexTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, IndexTable(m, k)).first;
  return it->second;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.n != b.n) throw StructuralError("wedge: dimension mismatch");
  int m = a.m(), k = a.k + b.k;
  if (k > m) throw DegreeError("wedge: degree exceeds 2n");
  if (a.is_zero || b.is_zero) return KForm::zero(a.n, k);
  const auto& tr = IndexTable::get(m, k);
  const auto& ta = IndexTable::get(m, a.k);
  const auto& tb = IndexTable::get(m, b.k);

  // (a^b)_J = sum over splits J = P u Q, |P| = deg a, of eps(P,Q) a_P b_Q.
  struct Term {
    int out, pa, pb, sign;
  };
  std::vector<Term> terms;
  int ka = a.k;
  for (int r = 0; r < tr.size(); ++r) {
    const MultiIndex& J = tr.at(r);
    // enumerate subsets of J of size deg a via combination table
    const auto& splits = IndexTable::get(k, ka);
    for (int s = 0; s < splits.size(); ++s) {
      const MultiIndex& S = splits.at(s);
      MultiIndex P, Q;
      std::vector<char> in(k, 0);
      for (int v : S) in[v] = 1;
      // shuffle sign: inversions needed to move all P slots in front
      int sign = 1, seenQ = 0;
      for (int pos = 0; pos < k; ++pos) {
        if (in[pos])
          sign = (seenQ % 2 == 0) ? sign : -sign;
        else
          ++seenQ;
      }
      for (int pos = 0; pos < k; ++pos) (in[pos] ? P : Q).push_back(J[pos]);
      terms.push_back({r, ta.rank(P), tb.rank(Q), sign});
    }
  }

  KForm res;
  res.n = a.n;
  res.k = k;
  res.ord = std::min(a.ord, b.ord);
  auto ca = a.coeffs, cb = b.coeffs;
  int ncomp = tr.size();
  res.coeffs = [ca, cb, terms, ncomp](const Point& p) {
    auto ja = ca(p);
    auto jb = cb(p);
    std::vector<Jet> out(ncomp, Jet::constant(0.0, p.m()));
    for (const auto& t : terms) {
      Jet prod = ja[t.pa] * jb[t.pb];
      out[t.out] += (t.sign > 0) ? prod : -prod;
    }
    return out;
  };
  return res;
}

KForm exterior_d(const KForm& a) {
  int m = a.m();
  if (a.k >= m) throw DegreeError("exterior_d: form already has top degree");
  if (a.is_zero) return KForm::zero(a.n, a.k + 1);
  if (a.ord < 1)
    throw CapabilityError("exterior_d: coefficients carry no derivatives");
  const auto& tin = IndexTable::get(m, a.k);
  const auto& tout = IndexTable::get(m, a.k + 1);
  int k1 = a.k + 1;

  // (da)_{j0<...<jk} = sum_s (-1)^s d_{j_s} a_{J \ j_s}
  struct Term {
    int out, in, dir, sign;
  };
  std::vector<Term> terms;
  for (int r = 0; r < tout.size(); ++r) {
    const MultiIndex& J = tout.at(r);
    for (int s = 0; s < k1; ++s) {
      MultiIndex rest;
      for (int q = 0; q < k1; ++q)
        if (q != s) rest.push_back(J[q]);
      terms.push_back({r, tin.rank(rest), J[s], (s % 2 == 0) ? 1 : -1});
    }
  }

  KForm res;
  res.n = a.n;
  res.k = k1;
  res.ord = a.ord - 1;
  auto ca = a.coeffs;
  int ncomp = tout.size();
  res.coeffs = [ca, terms, ncomp](const Point& p) {
    auto ja = ca(p);
    std::vector<Jet> out(ncomp, Jet::constant(0.0, p.m()));
    for (const auto& t : terms) {
      Jet d = ja[t.in].deriv(t.dir);
      out[t.out] += (t.sign > 0) ? d : -d;
    }
    return out;
  };
  return res;
}

KForm apply_I(const KForm& a) {
  if (a.is_zero) return a;
  if (a.k == 0) return a;
  int m = a.m();
  const auto& tab = IndexTable::get(m, a.k);

  // (Ia)_K = (-1)^k * prod(signs) * sigma * a_{sorted images of K}
  struct Term {
    int out, in, sign;
  };
  std::vector<Term> terms;
  int kk = a.k;
  for (int r = 0; r < tab.size(); ++r) {
    const MultiIndex& K = tab.at(r);
    MultiIndex img(kk);
    int sgn = (kk % 2 == 0) ? 1 : -1;
    for (int q = 0; q < kk; ++q) {
      img[q] = ComplexStructure::image(K[q]);
      sgn *= ComplexStructure::sign(K[q]);
    }
    int perm = sort_sign(img);
    terms.push_back({r, tab.rank(img), sgn * perm});
  }

  KForm res = a;
  auto ca = a.coeffs;
  int ncomp = tab.size();
  res.coeffs = [ca, terms, ncomp](const Point& p) {
    auto ja = ca(p);
    std::vector<Jet> out(ncomp, Jet::constant(0.0, p.m()));
    for (const auto& t : terms) out[t.out] = (t.sign > 0) ? ja[t.in] : -ja[t.in];
    return out;
  };
  return res;
}

KForm d_c(const KForm& a) {
  KForm r = apply_I(exterior_d(apply_I(a)));
  return (Conventions::DC_SIGN > 0) ? r : (-1.0) * r;
}

KForm dd_c(const ScalarField& f) { return exterior_d(d_c(KForm::from_scalar(f))); }

KForm interior_product(const VectorField& X, const KForm& a) {
  if (X.n != a.n) throw StructuralError("interior_product: dimension mismatch");
  if (a.k < 1) throw DegreeError("interior_product: degree must be >= 1");
  if (a.is_zero) return KForm::zero(a.n, a.k - 1);
  int m = a.m();
  const auto& tin = IndexTable::get(m, a.k);
  const auto& tout = IndexTable::get(m, a.k - 1);

  // (i_X a)_J = sum_{i not in J} sigma(i,J) X^i a_{sort(i u J)}
  struct Term {
    int out, in, comp, sign;
  };
  std::vector<Term> terms;
  for (int r = 0; r < tout.size(); ++r) {
    const MultiIndex& J = tout.at(r);
    for (int i = 0; i < m; ++i) {
      MultiIndex full = J;
      full.push_back(i);
      int sgn = sort_sign(full);
      if (sgn == 0) continue;
      // i enters in the first slot of a, so move it to the front:
      // a(e_i, e_J) = sign moving i past the entries of J smaller than i.
      int before = 0;
      for (int v : J)
        if (v < i) ++before;
      int slot = (before % 2 == 0) ? 1 : -1;
      terms.push_back({r, tin.rank(full), i, slot});
    }
  }

  KForm res;
  res.n = a.n;
  res.k = a.k - 1;
  res.ord = std::min(a.ord, X.ord);
  auto ca = a.coeffs;
  auto cx = X.eval;
  int ncomp = tout.size();
  res.coeffs = [ca, cx, terms, ncomp](const Point& p) {
    auto ja = ca(p);
    auto jx = cx(p);
    std::vector<Jet> out(ncomp, Jet::constant(0.0, p.m()));
    for (const auto& t : terms) {
      Jet prod = jx[t.comp] * ja[t.in];
      out[t.out] += (t.sign > 0) ? prod : -prod;
    }
    return out;
  };
  return res;
}

KForm lie_derivative(const VectorField& X, const KForm& a) {
  if (a.is_zero) return a;
  if (a.k == 0) return interior_product(X, exterior_d(a));
  if (a.k == a.m()) return exterior_d(interior_product(X, a));
  return exterior_d(interior_product(X, a)) +
         interior_product(X, exterior_d(a));
}

double evaluate_form(const KForm& a, const Point& p,
                     const std::vector<Eigen::VectorXd>& vectors) {
  if (static_cast<int>(vectors.size()) != a.k)
    throw StructuralError("evaluate_form: wrong number of vectors");
  if (a.k == 0) return a(p)[0].value();
  int m = a.m();
  Eigen::MatrixXd V(m, a.k);
  for (int i = 0; i < a.k; ++i) V.col(i) = vectors[i];
  auto comps = a(p);
  const auto& tab = IndexTable::get(m, a.k);
  double total = 0.0;
  Eigen::MatrixXd sub(a.k, a.k);
  for (int r = 0; r < tab.size(); ++r) {
    const MultiIndex& J = tab.at(r);
    for (int i = 0; i < a.k; ++i)
      for (int j = 0; j < a.k; ++j) sub(i, j) = V(J[i], j);
    total += comps[r].value() * sub.determinant();
  }
  return total;
}

double sup_coeff(const KForm& a, const Point& p) {
  if (a.is_zero) return 0.0;
  double s = 0.0;
  for (const auto& j : a(p)) s = std::max(s, std::abs(j.value()));
  return s;
}

Eigen::MatrixXd form2_matrix(const KForm& a, const Point& p) {
  if (a.k != 2) throw DegreeError("form2_matrix: need a 2-form");
  int m = a.m();
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(m, m);
  auto comps = a(p);
  const auto& tab = IndexTable::get(m, 2);
  for (int r = 0; r < tab.size(); ++r) {
    W(tab.at(r)[0], tab.at(r)[1]) = comps[r].value();
    W(tab.at(r)[1], tab.at(r)[0]) = -comps[r].value();
  }
  return W;
}

Eigen::MatrixXd hermitian_matrix(const KForm& w, const Point& p) {
  Eigen::MatrixXd W = form2_matrix(w, p);
  int m = p.m();
  Eigen::MatrixXd g(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      g(a, b) = ComplexStructure::sign(b) * W(a, ComplexStructure::image(b));
  return g;
}

std::vector<std::vector<Jet>> form2_matrix_jets(const KForm& a, const Point& p) {
  if (a.k != 2) throw DegreeError("form2_matrix_jets: need a 2-form");
  int m = a.m();
  auto comps = a(p);
  std::vector<std::vector<Jet>> W(m, std::vector<Jet>(m, Jet::constant(0.0, m)));
  const auto& tab = IndexTable::get(m, 2);
  for (int r = 0; r < tab.size(); ++r) {
    W[tab.at(r)[0]][tab.at(r)[1]] = comps[r];
    W[tab.at(r)[1]][tab.at(r)[0]] = -comps[r];
  }
  return W;
}

ScalarField pair_form2(const KForm& w, const VectorField& X,
                       const VectorField& Y) {
  ScalarField f;
  f.n = w.n;
  f.ord = std::min({w.ord, X.ord, Y.ord});
  auto cw = w;
  auto cx = X.eval, cy = Y.eval;
  f.eval = [cw, cx, cy](const Point& p) {
    auto W = form2_matrix_jets(cw, p);
    auto vx = cx(p);
    auto vy = cy(p);
    Jet s = Jet::constant(0.0, p.m());
    for (int a = 0; a < p.m(); ++a)
      for (int b = 0; b < p.m(); ++b) s += W[a][b] * vx[a] * vy[b];
    return s;
  };
  return f;
}

VectorField apply_I_vec(const VectorField& X) {
  VectorField r = X;
  auto cx = X.eval;
  r.eval = [cx](const Point& p) {
    auto v = cx(p);
    std::vector<Jet> out(v.size(), Jet::constant(0.0, p.m()));
    for (int a = 0; a < static_cast<int>(v.size()); ++a) {
      int img = ComplexStructure::image(a);
      int sgn = ComplexStructure::sign(a);
      out[img] = (sgn > 0) ? v[a] : -v[a];
    }
    return out;
  };
  return r;
}

}  // namespace lck
