#include "osp/rep_theory.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "osp/letters.hpp"

namespace osp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const auto end = std::min(text.find(',', start), text.size());
    std::string token(text.substr(start, end - start));
    std::erase(token, ' ');
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 6) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(token));
    start = end + 1;
  }
  return Partition(std::move(parts));
}

int Partition::weight() const {
  int sum = 0;
  for (int p : parts_) sum += p;
  return sum;
}

std::vector<int> Partition::padded(int size) const {
  if (length() > size) throw std::invalid_argument("partition " + to_string() + " has more than " +
                                                   std::to_string(size) + " parts");
  std::vector<int> out(parts_);
  out.resize(size, 0);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 1; c <= (*this)[0]; ++c) {
    int count = 0;
    for (int p : parts_) count += p >= c;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out + ")";
}

namespace {

ExactScalar ratio(long num, long den) {
  ExactScalar q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return q;
}

BigInt assert_integral(const ExactScalar& value, const char* what) {
  if (value.get_den() != 1) throw std::logic_error(std::string(what) + " produced a non-integer");
  return value.get_num();
}

// Enumerates sequences x_i in [low_i, high_i], largest first in each coordinate.
void for_each_in_box(const std::vector<int>& low, const std::vector<int>& high,
                     const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current(low.size());
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == low.size()) {
      visit(current);
      return;
    }
    for (int v = high[i]; v >= low[i]; --v) {
      current[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
}

void require_length(const Partition& lambda, int bound) {
  if (lambda.length() > bound) {
    throw std::invalid_argument("partition " + lambda.to_string() + " needs at most " +
                                std::to_string(bound) + " parts here");
  }
}

}  // namespace

BigInt dim_gl_weight(std::span<const int> weight) {
  const auto m = weight.size();
  for (std::size_t i = 1; i < m; ++i) {
    if (weight[i] > weight[i - 1]) throw std::invalid_argument("GL weight must be non-increasing");
  }
  ExactScalar product = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      product *= ratio(weight[i] - weight[j] + static_cast<long>(j - i), static_cast<long>(j - i));
  return assert_integral(product, "GL dimension formula");
}

BigInt dim_gl(const Partition& lambda, int m) {
  if (m < 0) throw std::invalid_argument("rank must be nonnegative");
  if (lambda.length() > m) return 0;
  const auto weight = lambda.padded(m);
  return dim_gl_weight(weight);
}

BigInt dim_sp(const Partition& nu, int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  if (nu.length() > n) return 0;
  std::vector<long> l(n), m(n);
  for (int i = 0; i < n; ++i) {
    m[i] = n - i;
    l[i] = nu[i] + m[i];
  }
  ExactScalar product = 1;
  for (int i = 0; i < n; ++i) {
    product *= ratio(l[i], m[i]);
    for (int j = i + 1; j < n; ++j) {
      product *= ratio(l[i] * l[i] - l[j] * l[j], m[i] * m[i] - m[j] * m[j]);
    }
  }
  return assert_integral(product, "symplectic dimension formula");
}

std::vector<Partition> interleavings(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  require_length(lambda, n + 1);
  std::vector<int> low(n), high(n);
  for (int i = 0; i < n; ++i) {
    high[i] = lambda[i];
    low[i] = lambda[i + 1];
  }
  std::vector<Partition> out;
  for_each_in_box(low, high, [&](const std::vector<int>& nu) { out.emplace_back(nu); });
  return out;
}

BigInt dim_odd(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  if (lambda.length() > n + 1) return 0;
  BigInt sum = 0;
  for (const auto& nu : interleavings(lambda, n)) sum += dim_sp(nu, n);
  return sum;
}

std::vector<FiltrationFactor> shtepin_factors(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  require_length(lambda, n + 1);
  std::vector<int> low(n + 1), high(n + 1);
  for (int i = 0; i <= n; ++i) {
    high[i] = lambda[i];
    low[i] = lambda[i + 1];
  }
  std::vector<FiltrationFactor> out;
  for_each_in_box(low, high, [&](const std::vector<int>& mu) {
    Partition inner(mu);
    const int shift = inner.weight() - lambda.weight();
    out.push_back({std::move(inner), shift});
  });
  return out;
}

FiltrationCheck filtration_dimension_check(const Partition& lambda, int n) {
  FiltrationCheck check;
  for (const auto& factor : shtepin_factors(lambda, n)) check.factor_sum += dim_odd(factor.inner, n);
  check.restricted_dimension = dim_sp(lambda, n + 1);
  return check;
}

BigInt h0_line_bundle(const Partition& lambda, int N) {
  if (N < 2) throw std::invalid_argument("ambient dimension must be at least 2");
  const int steps = (N - 1) / 2 + 1;
  require_length(lambda, steps);
  return N % 2 == 1 ? dim_odd(lambda, (N - 1) / 2) : dim_sp(lambda, N / 2);
}

namespace {

std::size_t lie_algebra_dimension(const LetterSpace& space) {
  const int N = space.dimension();
  auto J = [&](int a, int b) { return space.pairing(a + space.first, b + space.first); };
  // Unknown X(r, c) sits in column r * N + c; equation (a, b) is entry (a, b) of tX J + J X.
  ExactMatrix system(static_cast<std::size_t>(N * N), static_cast<std::size_t>(N * N));
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      const auto row = static_cast<std::size_t>(a * N + b);
      for (int r = 0; r < N; ++r) {
        if (const int j = J(r, b)) system(row, static_cast<std::size_t>(r * N + a)) += j;
        if (const int j = J(a, r)) system(row, static_cast<std::size_t>(r * N + b)) += j;
      }
    }
  }
  return kernel_and_rank(system).kernel.size();
}

}  // namespace

LieDimensions lie_dimension_check(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("lie_dimension_check supports 1 <= n <= 4");
  LieDimensions out;
  out.even = lie_algebra_dimension(LetterSpace::even(n));
  out.odd = lie_algebra_dimension(LetterSpace::odd(n));
  if (out.even != static_cast<std::size_t>(n * (2 * n + 1)) ||
      out.odd != static_cast<std::size_t>((n + 1) * (2 * n + 1))) {
    throw std::logic_error("Lie algebra dimension disagrees with the expected count");
  }
  return out;
}

}  // namespace osp
