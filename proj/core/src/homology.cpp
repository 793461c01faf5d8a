#include "hardsq/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>

namespace hardsq {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

}  // namespace

Field Field::gf(std::uint32_t prime) {
  if (!is_prime(prime) || prime >= (1u << 31))
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
  return Field(Kind::Prime, prime);
}

Field Field::parse(const std::string& text) {
  if (text == "rational" || text == "q" || text == "Q") return rational();
  if (text.size() > 2 && text.rfind("gf", 0) == 0) {
    const std::string digits = text.substr(2);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw std::invalid_argument("unknown field '" + text + "'");
    return gf(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw std::invalid_argument("unknown field '" + text + "'");
}

std::string Field::name() const {
  return kind_ == Kind::Rational ? "rational" : "gf" + std::to_string(prime_);
}

SparseMatrix::SparseMatrix(std::uint32_t rows, std::uint32_t cols, std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols) {
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry out of range");
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col)
      entries_.back().value = checked_add(entries_.back().value, e.value);
    else
      entries_.push_back(e);
  }
  std::erase_if(entries_, [](const MatrixEntry& e) { return e.value == 0; });
}

SparseMatrix SparseMatrix::identity(std::uint32_t k) {
  std::vector<MatrixEntry> es;
  es.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) es.push_back({i, i, 1});
  return SparseMatrix(k, k, std::move(es));
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes do not compose");
  // Rows of rhs, for a row-by-row product.
  std::vector<std::size_t> start(std::size_t(rhs.rows_) + 1, 0);
  for (const auto& e : rhs.entries_) ++start[e.row + 1];
  for (std::size_t i = 0; i < rhs.rows_; ++i) start[i + 1] += start[i];

  std::vector<MatrixEntry> out;
  std::vector<std::int64_t> acc(rhs.cols_, 0);
  std::vector<std::uint32_t> touched;
  std::size_t i = 0;
  while (i < entries_.size()) {
    std::uint32_t row = entries_[i].row;
    for (; i < entries_.size() && entries_[i].row == row; ++i) {
      const auto& a = entries_[i];
      for (std::size_t t = start[a.col]; t < start[a.col + 1]; ++t) {
        const auto& b = rhs.entries_[t];
        if (acc[b.col] == 0) touched.push_back(b.col);
        acc[b.col] = checked_add(acc[b.col], checked_mul(a.value, b.value));
      }
    }
    for (auto c : touched) {
      if (acc[c] != 0) out.push_back({row, c, acc[c]});
      acc[c] = 0;
    }
    touched.clear();
  }
  return SparseMatrix(rows_, rhs.cols_, std::move(out));
}

namespace {

Reduction reduce_gf2(const SparseMatrix& m, const std::vector<bool>& cleared) {
  std::vector<std::vector<std::uint32_t>> cols(m.cols());
  for (const auto& e : m.entries())
    if (e.value % 2 != 0) cols[e.col].push_back(e.row);

  Reduction red;
  std::vector<std::int64_t> pivot_col(m.rows(), -1);
  std::vector<std::uint32_t> scratch;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!cleared.empty() && cleared[c]) {
      cols[c].clear();
      continue;
    }
    auto& col = cols[c];
    while (!col.empty()) {
      std::uint32_t low = col.back();
      std::int64_t j = pivot_col[low];
      if (j < 0) {
        pivot_col[low] = static_cast<std::int64_t>(c);
        ++red.rank;
        red.pivot_rows.push_back(low);
        break;
      }
      const auto& other = cols[std::size_t(j)];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
  }
  return red;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

Reduction reduce_gfp(const SparseMatrix& m, std::uint64_t p, const std::vector<bool>& cleared) {
  using Entry = std::pair<std::uint32_t, std::uint64_t>;
  std::vector<std::vector<Entry>> cols(m.cols());
  for (const auto& e : m.entries()) {
    std::int64_t r = e.value % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r != 0) cols[e.col].emplace_back(e.row, static_cast<std::uint64_t>(r));
  }

  Reduction red;
  std::vector<std::int64_t> pivot_col(m.rows(), -1);
  std::vector<Entry> scratch;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!cleared.empty() && cleared[c]) {
      cols[c].clear();
      continue;
    }
    auto& col = cols[c];
    while (!col.empty()) {
      auto [low, value] = col.back();
      std::int64_t j = pivot_col[low];
      if (j < 0) {
        pivot_col[low] = static_cast<std::int64_t>(c);
        ++red.rank;
        red.pivot_rows.push_back(low);
        break;
      }
      const auto& other = cols[std::size_t(j)];
      // col -= factor * other, with factor chosen to cancel the pivot.
      std::uint64_t factor = value * pow_mod(other.back().second, p - 2, p) % p;
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < other.size()) {
        if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
          scratch.push_back(col[a++]);
        } else {
          std::uint64_t sub = factor * other[b].second % p;
          if (a < col.size() && col[a].first == other[b].first) {
            std::uint64_t v = (col[a].second + p - sub) % p;
            if (v) scratch.emplace_back(col[a].first, v);
            ++a;
          } else {
            scratch.emplace_back(other[b].first, (p - sub) % p);
          }
          ++b;
        }
      }
      col.swap(scratch);
    }
  }
  return red;
}

Reduction reduce_rational(const SparseMatrix& m, const std::vector<bool>& cleared) {
  using boost::multiprecision::cpp_int;
  using Entry = std::pair<std::uint32_t, cpp_int>;
  std::vector<std::vector<Entry>> cols(m.cols());
  for (const auto& e : m.entries()) cols[e.col].emplace_back(e.row, cpp_int(e.value));

  Reduction red;
  std::vector<std::int64_t> pivot_col(m.rows(), -1);
  std::vector<Entry> scratch;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!cleared.empty() && cleared[c]) {
      cols[c].clear();
      continue;
    }
    auto& col = cols[c];
    while (!col.empty()) {
      std::uint32_t low = col.back().first;
      std::int64_t j = pivot_col[low];
      if (j < 0) {
        pivot_col[low] = static_cast<std::int64_t>(c);
        ++red.rank;
        red.pivot_rows.push_back(low);
        break;
      }
      const auto& other = cols[std::size_t(j)];
      // Fraction-free step: col <- pv * col - cv * other.
      cpp_int pv = other.back().second;
      cpp_int cv = col.back().second;
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < other.size()) {
        if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
          scratch.emplace_back(col[a].first, pv * col[a].second);
          ++a;
        } else if (a == col.size() || other[b].first < col[a].first) {
          scratch.emplace_back(other[b].first, -cv * other[b].second);
          ++b;
        } else {
          cpp_int v = pv * col[a].second - cv * other[b].second;
          if (v != 0) scratch.emplace_back(col[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      cpp_int content = 0;
      for (const auto& [row, v] : scratch) content = gcd(content, abs(v));
      if (content > 1)
        for (auto& entry : scratch) entry.second /= content;
      col.swap(scratch);
    }
  }
  return red;
}

}  // namespace

Reduction reduce(const SparseMatrix& m, const Field& field, const std::vector<bool>& cleared) {
  if (!cleared.empty() && cleared.size() != m.cols())
    throw std::invalid_argument("cleared flags must cover every column");
  if (field.kind() == Field::Kind::Rational) return reduce_rational(m, cleared);
  if (field.prime() == 2) return reduce_gf2(m, cleared);
  return reduce_gfp(m, field.prime(), cleared);
}

std::size_t rank(const SparseMatrix& m, const Field& field) { return reduce(m, field).rank; }

void ChainComplex::validate_shapes() const {
  if (boundaries.size() != cells.size())
    throw std::logic_error("chain complex needs one boundary matrix per degree");
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& d = boundaries[j];
    std::uint64_t want_rows = j == 0 ? 0 : cells[j - 1];
    if (d.cols() != cells[j] || d.rows() != want_rows)
      throw std::logic_error("boundary matrix " + std::to_string(j) + " has the wrong shape");
  }
}

bool ChainComplex::boundary_squared_zero() const {
  validate_shapes();
  for (std::size_t j = 2; j < boundaries.size(); ++j)
    if (!boundaries[j - 1].multiply(boundaries[j]).is_zero()) return false;
  return true;
}

std::int64_t BettiVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t j = 0; j < values.size(); ++j)
    chi += (j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(values[j]);
  return chi;
}

BettiVector betti(const ChainComplex& cc, const Field& field) {
  cc.validate_shapes();
  const std::size_t top = cc.cells.size();
  std::vector<std::size_t> ranks(top + 1, 0);
  std::vector<bool> cleared_next;
  for (std::size_t j = top; j-- > 1;) {
    const auto& d = cc.boundaries[j];
    if (cleared_next.size() != d.cols()) cleared_next.assign(d.cols(), false);
    Reduction red = reduce(d, field, cleared_next);
    ranks[j] = red.rank;
    cleared_next.assign(d.rows(), false);
    for (auto r : red.pivot_rows) cleared_next[r] = true;
  }
  BettiVector bv;
  bv.field = field;
  bv.values.resize(top, 0);
  for (std::size_t j = 0; j < top; ++j)
    bv.values[j] = cc.cells[j] - ranks[j] - (j + 1 < top ? ranks[j + 1] : 0);
  while (!bv.values.empty() && bv.values.back() == 0) bv.values.pop_back();
  return bv;
}

int vanishing_bound(int n, int p, int q) {
  const int area = p * q;
  if (n > area) return -1;
  return std::min({area - n, n, area / 3});
}

AuditReport audit(int n, int p, int q, const BettiVector& bv, const FVector& fv,
                  std::span<const std::uint64_t> critical_counts) {
  AuditReport report;
  const int bound = vanishing_bound(n, p, q);
  for (std::size_t j = 0; j < bv.values.size(); ++j) {
    if (bv.values[j] != 0 && static_cast<int>(j) > bound) {
      std::ostringstream os;
      os << "beta_" << j << " = " << bv.values[j] << " is nonzero above the vanishing bound "
         << bound;
      report.failures.push_back(os.str());
    }
  }
  if (fv.euler_characteristic() != bv.euler_characteristic()) {
    std::ostringstream os;
    os << "Euler characteristic mismatch: cells give " << fv.euler_characteristic()
       << ", Betti numbers give " << bv.euler_characteristic();
    report.failures.push_back(os.str());
  }
  if (!critical_counts.empty()) {
    for (std::size_t j = 0; j < std::max(critical_counts.size(), bv.values.size()); ++j) {
      std::uint64_t m = j < critical_counts.size() ? critical_counts[j] : 0;
      if (m < bv.at(j)) {
        std::ostringstream os;
        os << "Morse inequality fails in degree " << j << ": " << m << " critical cells, beta = "
           << bv.at(j);
        report.failures.push_back(os.str());
      }
    }
  }
  if (p * q - n == 0 && n > 0) report.notes.push_back("pq - n = 0 forces a 0-dimensional complex");
  if (n > p * q) report.notes.push_back("n > pq: the complex is empty");
  return report;
}

}  // namespace hardsq
