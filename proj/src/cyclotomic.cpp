#include "famindex/cyclotomic.hpp"

#include <stdexcept>
#include <vector>

namespace famindex {

namespace {

using IntPoly = std::vector<long>;  // coefficient i of x^i

IntPoly cyclotomic_poly(int n) {
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPoly den = cyclotomic_poly(d);  // monic
    IntPoly quo(num.size() - den.size() + 1, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
      const long q = num[i];
      const int shift = i - static_cast<int>(den.size()) + 1;
      quo[shift] = q;
      for (std::size_t k = 0; k < den.size(); ++k) num[shift + k] -= q * den[k];
    }
    num = quo;
  }
  return num;
}

// powers[k] = x^k reduced modulo Phi_60, for 0 <= k < 60.
struct PowerTable {
  std::vector<std::array<long, Cyc::kDegree>> powers;

  PowerTable() {
    const IntPoly phi = cyclotomic_poly(Cyc::kOrder);
    if (static_cast<int>(phi.size()) != Cyc::kDegree + 1) throw std::logic_error("Phi_60 degree");
    std::array<long, Cyc::kDegree> cur{};
    cur[0] = 1;
    for (int k = 0; k < Cyc::kOrder; ++k) {
      powers.push_back(cur);
      // multiply by x
      const long top = cur[Cyc::kDegree - 1];
      for (int i = Cyc::kDegree - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < Cyc::kDegree; ++i) cur[i] -= top * phi[i];
    }
  }
};

const PowerTable& table() {
  static const PowerTable t;
  return t;
}

}  // namespace

Cyc Cyc::root(int n, int k) {
  if (n <= 0 || kOrder % n != 0) throw std::domain_error("root order must divide 60");
  const int e = (((k % n) + n) % n) * (kOrder / n);
  Cyc out;
  const auto& p = table().powers[e];
  for (int i = 0; i < kDegree; ++i) out.c_[i] = p[i];
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (int i = 1; i < kDegree; ++i)
    if (c_[i] != 0) return false;
  return true;
}

const mpq_class& Cyc::rational() const {
  if (!is_rational()) throw std::domain_error("not rational: " + to_string(*this));
  return c_[0];
}

Cyc& Cyc::operator+=(const Cyc& o) {
  for (int i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  for (int i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc out;
  for (int i = 0; i < kDegree; ++i) out.c_[i] = -c_[i];
  return out;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (o.is_rational()) {
    for (auto& q : c_) q *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    const mpq_class s = c_[0];
    *this = o;
    for (auto& q : c_) q *= s;
    return *this;
  }
  std::array<mpq_class, 2 * kDegree - 1> prod{};
  for (int i = 0; i < kDegree; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < kDegree; ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  const auto& pw = table().powers;
  for (int i = 0; i < kDegree; ++i) c_[i] = prod[i];
  for (int k = kDegree; k < 2 * kDegree - 1; ++k) {
    if (prod[k] == 0) continue;
    for (int i = 0; i < kDegree; ++i) c_[i] += prod[k] * pw[k][i];
  }
  return *this;
}

Cyc Cyc::conj() const {
  Cyc out;
  const auto& pw = table().powers;
  for (int k = 0; k < kDegree; ++k) {
    if (c_[k] == 0) continue;
    const auto& p = pw[(kOrder - k) % kOrder];
    for (int i = 0; i < kDegree; ++i) out.c_[i] += c_[k] * p[i];
  }
  return out;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return Cyc(mpq_class(1 / c_[0]));
  // Solve (multiplication by *this) a = 1 over Q.
  std::vector<std::vector<mpq_class>> m(kDegree, std::vector<mpq_class>(kDegree + 1));
  for (int col = 0; col < kDegree; ++col) {
    const Cyc img = *this * root(kOrder, col);
    for (int row = 0; row < kDegree; ++row) m[row][col] = img.c_[row];
  }
  m[0][kDegree] = 1;
  for (int col = 0; col < kDegree; ++col) {
    int piv = col;
    while (piv < kDegree && m[piv][col] == 0) ++piv;
    if (piv == kDegree) throw std::logic_error("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    const mpq_class p = m[col][col];
    for (auto& v : m[col]) v /= p;
    for (int row = 0; row < kDegree; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const mpq_class f = m[row][col];
      for (int k = col; k <= kDegree; ++k) m[row][k] -= f * m[col][k];
    }
  }
  Cyc out;
  for (int i = 0; i < kDegree; ++i) out.c_[i] = m[i][kDegree];
  return out;
}

std::strong_ordering operator<=>(const Cyc& a, const Cyc& b) {
  for (int i = 0; i < Cyc::kDegree; ++i) {
    const int c = cmp(a.c_[i], b.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Cyc& x) {
  if (x.is_rational()) return x.coeff(0).get_str();
  std::string out;
  for (int i = 0; i < Cyc::kDegree; ++i) {
    const mpq_class& q = x.coeff(i);
    if (q == 0) continue;
    std::string term;
    if (i == 0) {
      term = mpq_class(abs(q)).get_str();
    } else {
      term = (abs(q) == 1 ? std::string() : mpq_class(abs(q)).get_str() + "*") + "z" +
             (i == 1 ? std::string() : "^" + std::to_string(i));
    }
    if (out.empty()) {
      out = (q < 0 ? "-" : "") + term;
    } else {
      out += (q < 0 ? "-" : "+") + term;
    }
  }
  return out;
}

}  // namespace famindex
