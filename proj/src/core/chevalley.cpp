#include "chevalley.hpp"

namespace traceform {

namespace {

IMat zeros(size_t r, size_t c) { return IMat(r, c); }

Int trace_of(const IMat& m) {
  Int t = 0;
  for (size_t i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

IMat bracket(const IMat& a, const IMat& b) {
  const IMat ab = mat_mul(a, b);
  const IMat ba = mat_mul(b, a);
  IMat out(a.rows, a.cols);
  for (size_t i = 0; i < out.rows; ++i) {
    for (size_t j = 0; j < out.cols; ++j) out(i, j) = ab(i, j) - ba(i, j);
  }
  return out;
}

// Coefficients of a traceless n x n matrix in the Chevalley basis of the
// natural model: partial row sums of the diagonal for the Cartan part, the
// off-diagonal entries for the root part.
std::vector<Int> decompose_natural(const MatrixRep& natural, const IMat& m) {
  const int n = natural.n;
  std::vector<Int> coeffs;
  coeffs.reserve(natural.basis_size());
  Int partial = 0;
  for (int k = 0; k < n - 1; ++k) {
    partial += m(k, k);
    coeffs.push_back(partial);
  }
  for (const auto& [i, j] : natural.root_of) {
    coeffs.push_back(m(i - 1, j - 1));
  }
  return coeffs;
}

}  // namespace

MatrixRep chevalley_sl(int n) {
  if (n < 2 || n > 5) {
    fail(ErrorCode::InvalidArgument,
         "chevalley_sl: supported range is 2 <= n <= 5");
  }
  MatrixRep rep;
  rep.n = n;
  rep.dim = static_cast<size_t>(n);
  rep.cartan_count = n - 1;
  for (int i = 1; i < n; ++i) {
    IMat h = zeros(rep.dim, rep.dim);
    h(i - 1, i - 1) = 1;
    h(i, i) = -1;
    rep.labels.push_back("h" + std::to_string(i));
    rep.images.push_back(std::move(h));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      IMat x = zeros(rep.dim, rep.dim);
      x(i - 1, j - 1) = 1;
      rep.labels.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      rep.root_of.emplace_back(i, j);
      rep.images.push_back(std::move(x));
    }
  }
  return rep;
}

MatrixRep adjoint_of(const MatrixRep& rep) {
  // Brackets are decomposed through the natural model of the same sl_n,
  // whose basis the representation shares.
  const MatrixRep natural = chevalley_sl(rep.n);
  const size_t d = natural.basis_size();
  if (rep.basis_size() != d) {
    fail(ErrorCode::InvalidArgument, "adjoint_of: malformed representation");
  }
  MatrixRep ad;
  ad.n = rep.n;
  ad.dim = d;
  ad.cartan_count = rep.cartan_count;
  ad.labels = rep.labels;
  ad.root_of = rep.root_of;
  for (size_t b = 0; b < d; ++b) {
    IMat image = zeros(d, d);
    for (size_t j = 0; j < d; ++j) {
      const IMat br = bracket(natural.images[b], natural.images[j]);
      const std::vector<Int> col = decompose_natural(natural, br);
      for (size_t i = 0; i < d; ++i) image(i, j) = col[i];
    }
    ad.images.push_back(std::move(image));
  }
  return ad;
}

IMat trace_gram(const MatrixRep& rep) {
  const size_t d = rep.basis_size();
  IMat gram(d, d);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i; j < d; ++j) {
      const Int t = trace_of(mat_mul(rep.images[i], rep.images[j]));
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  return gram;
}

IMat trace_gram_mod(const MatrixRep& rep, int64_t p) {
  if (p < 2) fail(ErrorCode::InvalidArgument, "trace_gram_mod: need p >= 2");
  IMat gram = trace_gram(rep);
  for (size_t i = 0; i < gram.rows; ++i) {
    for (size_t j = 0; j < gram.cols; ++j) {
      Int r = gram(i, j) % p;
      if (r < 0) r += p;
      gram(i, j) = r;
    }
  }
  return gram;
}

bool is_zero_mod(const IMat& m, int64_t p) {
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) {
      if (m(i, j) % p != 0) return false;
    }
  }
  return true;
}

IMat normalized_form_gram(int n) {
  if (n < 2 || n > 5) {
    fail(ErrorCode::InvalidArgument,
         "normalized_form_gram: supported range is 2 <= n <= 5");
  }
  // Recreate the basis layout without building matrices.
  const MatrixRep shape = chevalley_sl(n);
  const size_t d = shape.basis_size();
  const size_t hc = static_cast<size_t>(shape.cartan_count);
  IMat gram(d, d);
  for (size_t i = 0; i < hc; ++i) {
    gram(i, i) = 2;
    if (i + 1 < hc) {
      gram(i, i + 1) = -1;
      gram(i + 1, i) = -1;
    }
  }
  for (size_t a = 0; a < shape.root_of.size(); ++a) {
    for (size_t b = 0; b < shape.root_of.size(); ++b) {
      const auto& [i, j] = shape.root_of[a];
      const auto& [k, l] = shape.root_of[b];
      if (i == l && j == k) gram(hc + a, hc + b) = 1;
    }
  }
  return gram;
}

Int s_rho(const MatrixRep& rep, const std::vector<Int>& coeffs) {
  if (coeffs.size() != rep.basis_size()) {
    fail(ErrorCode::InvalidArgument,
         "s_rho: expected one coefficient per basis element");
  }
  IMat m = zeros(rep.dim, rep.dim);
  for (size_t b = 0; b < coeffs.size(); ++b) {
    if (coeffs[b] == 0) continue;
    const IMat& img = rep.images[b];
    for (size_t i = 0; i < m.rows; ++i) {
      for (size_t j = 0; j < m.cols; ++j) m(i, j) += coeffs[b] * img(i, j);
    }
  }
  const Int t1 = trace_of(m);
  const Int t2 = trace_of(mat_mul(m, m));
  const Int twice = t2 - t1 * t1;
  if (twice % 2 != 0) {
    fail(ErrorCode::Internal, "s_rho: odd second power sum");
  }
  return twice / 2;
}

int64_t baby_verma_trace(int64_t p, int64_t a) {
  if (!is_prime(Int(p))) {
    fail(ErrorCode::InvalidArgument, "baby_verma_trace: p must be prime");
  }
  Int sum = 0;
  for (int64_t i = 0; i < p; ++i) {
    const Int term = Int(a) - 2 * i;
    sum += term * term;
  }
  Int r = sum % p;
  if (r < 0) r += p;
  return to_int64(r);
}

}  // namespace traceform
