#include "baext/rs.hpp"

#include <stdexcept>

#include "baext/gf.hpp"

namespace baext::rs {

namespace {

constexpr int kWidthTier[] = {4, 8, 16, 32, 64};

gf::Elem fe(uint64_t v, int w) { return gf::Elem{v, w}; }

// Evaluation point for codeword index i (0-based): the field element i+1.
uint64_t eval_point(int i) { return uint64_t(i) + 1; }

uint64_t poly_eval(const std::vector<uint64_t>& coeffs, uint64_t x, int w) {
  uint64_t acc = 0;
  for (size_t j = coeffs.size(); j-- > 0;) acc = gf::mul(fe(acc, w), fe(x, w)).v ^ coeffs[j];
  return acc;
}

// Solves A u = rhs over GF(2^w) via Gaussian elimination, augmented matrix
// rows of size cols+1. Free variables are fixed to zero. Returns nullopt on
// an inconsistent system.
std::optional<std::vector<uint64_t>> solve_linear(std::vector<std::vector<uint64_t>>& m, int cols, int w) {
  int rows = int(m.size());
  std::vector<int> pivot_col_of_row(rows, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    uint64_t inv = gf::inv(fe(m[r][c], w)).v;
    for (int j = c; j <= cols; ++j) m[r][j] = gf::mul(fe(m[r][j], w), fe(inv, w)).v;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      uint64_t f = m[i][c];
      for (int j = c; j <= cols; ++j) m[i][j] ^= gf::mul(fe(f, w), fe(m[r][j], w)).v;
    }
    pivot_col_of_row[r] = c;
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<uint64_t> u(cols, 0);
  for (int i = 0; i < r; ++i) u[pivot_col_of_row[i]] = m[i][cols];
  return u;
}

// One Berlekamp-Welch component solve: points (x_i, y_i), error budget e,
// dimension k. Returns the k message coefficients or nullopt.
std::optional<std::vector<uint64_t>> bw_component(const std::vector<std::pair<uint64_t, uint64_t>>& pts, int e,
                                                  int k, int w) {
  int qn = e + k;
  int cols = qn + e;  // q_0..q_{qn-1}, e_0..e_{e-1}; E is monic of degree e
  std::vector<std::vector<uint64_t>> m;
  m.reserve(pts.size());
  for (auto [x, y] : pts) {
    std::vector<uint64_t> row(cols + 1, 0);
    uint64_t xp = 1;
    for (int j = 0; j < qn; ++j) {
      row[j] = xp;
      xp = gf::mul(fe(xp, w), fe(x, w)).v;
    }
    uint64_t yxp = y;
    for (int j = 0; j < e; ++j) {
      row[qn + j] = yxp;
      yxp = gf::mul(fe(yxp, w), fe(x, w)).v;
    }
    row[cols] = yxp;  // y * x^e
    m.push_back(std::move(row));
  }
  auto sol = solve_linear(m, cols, w);
  if (!sol) return std::nullopt;
  std::vector<uint64_t> q(sol->begin(), sol->begin() + qn);
  std::vector<uint64_t> locator(sol->begin() + qn, sol->end());
  locator.push_back(1);  // monic x^e term
  // p = q / locator; nonzero remainder means too many errors.
  std::vector<uint64_t> rem = q;
  std::vector<uint64_t> quot(k, 0);
  for (int d = qn - 1; d >= e; --d) {
    uint64_t c = rem[d];  // locator is monic so no division needed
    if (c == 0) continue;
    quot[d - e] = c;
    for (int j = 0; j <= e; ++j) rem[d - e + j] ^= gf::mul(fe(c, w), fe(locator[j], w)).v;
  }
  for (int d = 0; d < e; ++d)
    if (rem[d] != 0) return std::nullopt;
  return quot;
}

}  // namespace

int symbol_bits_for(uint64_t ell, int n, int k) {
  if (ell < 1 || n < 1 || k < 1 || k > n) throw std::invalid_argument("rs: bad code parameters");
  for (int w : kWidthTier) {
    if (w < 64 && (uint64_t{1} << w) <= uint64_t(n)) continue;
    uint64_t per_symbol = uint64_t(k) * uint64_t(w);
    uint64_t comps = (ell + per_symbol - 1) / per_symbol;
    if (comps < 1) comps = 1;
    if (comps > (uint64_t{1} << 20)) throw std::invalid_argument("rs: message too long for symbol tier");
    return int(uint64_t(w) * comps);
  }
  throw std::invalid_argument("rs: no supported field width exceeds n");
}

CodeParams CodeParams::make(uint64_t ell, int n, int k) {
  CodeParams p;
  p.n = n;
  p.k = k;
  p.msg_len = ell;
  p.symbol_bits = symbol_bits_for(ell, n, k);
  for (int w : kWidthTier)
    if (w == 64 || (uint64_t{1} << w) > uint64_t(n)) {
      p.field_width = w;
      break;
    }
  p.components = p.symbol_bits / p.field_width;
  return p;
}

Codeword encode(const Bits& msg, const CodeParams& p) {
  if (msg.size() != p.msg_len) throw std::invalid_argument("rs: message length mismatch");
  int w = p.field_width;
  Codeword out(p.n);
  // Data element (j, c) is the message chunk at bit j*symbol_bits + c*w,
  // zero-padded past msg_len; it is the x^j coefficient of component c.
  for (int c = 0; c < p.components; ++c) {
    std::vector<uint64_t> coeffs(p.k);
    for (int j = 0; j < p.k; ++j) coeffs[j] = msg.chunk(size_t(j) * p.symbol_bits + size_t(c) * w, w);
    for (int i = 0; i < p.n; ++i) {
      if (c == 0) out[i] = Symbol(p.components, 0);
      (*out[i])[c] = poly_eval(coeffs, eval_point(i), w);
    }
  }
  return out;
}

std::optional<Bits> decode(const Codeword& cw, const CodeParams& p) {
  if (int(cw.size()) != p.n) throw std::invalid_argument("rs: codeword length mismatch");
  int w = p.field_width;
  std::vector<int> present;
  for (int i = 0; i < p.n; ++i)
    if (cw[i] && int(cw[i]->size()) == p.components) present.push_back(i);
  int d = p.n - int(present.size());
  if (int(present.size()) < p.k) return std::nullopt;
  int e = (p.n - p.k - d) / 2;
  Bits msg(p.msg_len);
  for (int c = 0; c < p.components; ++c) {
    std::vector<std::pair<uint64_t, uint64_t>> pts;
    pts.reserve(present.size());
    for (int i : present) pts.emplace_back(eval_point(i), (*cw[i])[c]);
    auto coeffs = bw_component(pts, e, p.k, w);
    if (!coeffs) return std::nullopt;
    for (int j = 0; j < p.k; ++j) {
      size_t start = size_t(j) * p.symbol_bits + size_t(c) * w;
      if (start < p.msg_len) msg.set_chunk(start, w, (*coeffs)[j]);
    }
  }
  return msg;
}

Bits pack_symbol(const Symbol& s, const CodeParams& p) {
  Bits b(p.symbol_bits);
  for (int c = 0; c < p.components; ++c) b.set_chunk(size_t(c) * p.field_width, p.field_width, s[c]);
  return b;
}

std::optional<Symbol> unpack_symbol(const Bits& b, const CodeParams& p) {
  if (int(b.size()) != p.symbol_bits) return std::nullopt;
  Symbol s(p.components);
  for (int c = 0; c < p.components; ++c) s[c] = b.chunk(size_t(c) * p.field_width, p.field_width);
  return s;
}

}  // namespace baext::rs
