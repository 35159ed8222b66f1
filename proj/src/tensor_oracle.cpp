#include "osp/tensor_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osp {

OddSymplecticForm::OddSymplecticForm(int N) : space_(LetterSpace::from_dimension(N)) {}

ExactMatrix OddSymplecticForm::gram() const {
  const auto N = static_cast<std::size_t>(dimension());
  ExactMatrix g(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) g(a, b) = (*this)(static_cast<int>(a), static_cast<int>(b));
  return g;
}

namespace {

using Digits = std::vector<int>;

std::uint32_t power(int N, int d) {
  std::uint32_t out = 1;
  for (int i = 0; i < d; ++i) out *= static_cast<std::uint32_t>(N);
  return out;
}

Digits decode(std::uint32_t code, int N, int d) {
  Digits digits(d);
  for (int i = d - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(code % N);
    code /= N;
  }
  return digits;
}

std::uint32_t encode(const Digits& digits, int N) {
  std::uint32_t code = 0;
  for (int x : digits) code = code * N + x;
  return code;
}

void check_caps(int d, int N) {
  if (d > kMaxTensorDegree) throw std::invalid_argument("tensor oracle supports |λ| <= 4");
  if (N < 1 || N > kMaxTensorDimension) throw std::invalid_argument("tensor oracle supports 1 <= N <= 7");
}

struct SignedPermutationTerm {
  Digits image;  // position k goes to image[k]
  int sign;
};

// Permutations of the d positions preserving every block of `blocks`.
std::vector<SignedPermutationTerm> block_group(int d, const std::vector<int>& block_of, bool signed_sum) {
  std::vector<SignedPermutationTerm> out;
  Digits perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool preserves = true;
    for (int k = 0; k < d && preserves; ++k) preserves = block_of[perm[k]] == block_of[k];
    if (!preserves) continue;
    int inversions = 0;
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) inversions += perm[a] > perm[b];
    out.push_back({perm, signed_sum && inversions % 2 ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SparseTensor act(const std::vector<SignedPermutationTerm>& group, const SparseTensor& tensor, int N, int d) {
  SparseTensor out;
  for (const auto& [code, coefficient] : tensor) {
    const Digits digits = decode(code, N, d);
    Digits moved(d);
    for (const auto& term : group) {
      for (int k = 0; k < d; ++k) moved[term.image[k]] = digits[k];
      auto& slot = out[encode(moved, N)];
      if (term.sign > 0) slot += coefficient; else slot -= coefficient;
    }
  }
  std::erase_if(out, [](const auto& entry) { return sgn(entry.second) == 0; });
  return out;
}

// Content of a tensor code: the multiset of its factors, as sorted digits.
Digits content(std::uint32_t code, int N, int d) {
  Digits digits = decode(code, N, d);
  std::sort(digits.begin(), digits.end());
  return digits;
}

}  // namespace

ExactMatrix contraction_matrix(int p, int q, int d, const OddSymplecticForm& form) {
  const int N = form.dimension();
  if (p < 1 || q <= p || q > d) throw std::invalid_argument("contraction needs 1 <= p < q <= d");
  check_caps(d, N);
  ExactMatrix m(power(N, d - 2), power(N, d));
  for (std::uint32_t code = 0; code < power(N, d); ++code) {
    const Digits digits = decode(code, N, d);
    const int value = form(digits[p - 1], digits[q - 1]);
    if (value == 0) continue;
    Digits rest;
    for (int k = 0; k < d; ++k)
      if (k != p - 1 && k != q - 1) rest.push_back(digits[k]);
    m(encode(rest, N), code) += value;
  }
  return m;
}

SparseTensor apply_young_symmetrizer(const Partition& lambda, int N, const SparseTensor& tensor) {
  const int d = lambda.weight();
  check_caps(d, N);
  std::vector<int> row_of, column_of;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      row_of.push_back(r);
      column_of.push_back(c);
    }
  const auto rows = block_group(d, row_of, false);
  const auto columns = block_group(d, column_of, true);
  return act(columns, act(rows, tensor, N, d), N, d);
}

namespace {

// Basis of S_λV grouped by content; each block is reduced in local coordinates.
std::map<Digits, std::vector<SparseTensor>> schur_blocks(const Partition& lambda, int N) {
  const int d = lambda.weight();
  check_caps(d, N);
  struct Block {
    std::vector<std::uint32_t> codes;
    IntegerRowSpace space{0};
  };
  std::map<Digits, Block> blocks;
  for (std::uint32_t code = 0; code < power(N, d); ++code) {
    const SparseTensor image = apply_young_symmetrizer(lambda, N, {{code, 1}});
    if (image.empty()) continue;
    auto& block = blocks[content(code, N, d)];
    if (block.codes.empty()) {
      Digits digits = content(code, N, d);
      do block.codes.push_back(encode(digits, N));
      while (std::next_permutation(digits.begin(), digits.end()));
      block.space = IntegerRowSpace(block.codes.size());
    }
    std::vector<BigInt> local(block.codes.size());
    for (const auto& [c, value] : image) {
      const auto at = std::lower_bound(block.codes.begin(), block.codes.end(), c) - block.codes.begin();
      local[static_cast<std::size_t>(at)] = value;
    }
    block.space.insert(std::move(local));
  }
  std::map<Digits, std::vector<SparseTensor>> out;
  for (auto& [key, block] : blocks) {
    for (const auto& row : block.space.rows()) {
      SparseTensor t;
      for (std::size_t i = 0; i < row.size(); ++i)
        if (sgn(row[i]) != 0) t[block.codes[i]] = row[i];
      out[key].push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

std::vector<SparseTensor> schur_subspace(const Partition& lambda, int N) {
  std::vector<SparseTensor> out;
  for (auto& [key, basis] : schur_blocks(lambda, N))
    for (auto& t : basis) out.push_back(std::move(t));
  return out;
}

std::size_t trace_free_schur_dim(const Partition& lambda, int N) {
  const int d = lambda.weight();
  const OddSymplecticForm form(N);
  const auto& space = form.letters();
  const auto blocks = schur_blocks(lambda, N);

  // Torus weight of a content: multiplicity of each unbarred letter minus that of its opposite.
  auto weight_of = [&](const Digits& digits) {
    std::vector<int> w(space.n + 1, 0);
    for (int x : digits) {
      const int letter = x + space.first;
      if (letter == 0) continue;
      if (space.barred(letter)) --w[space.opposite(letter)]; else ++w[letter];
    }
    return w;
  };
  std::map<std::vector<int>, std::vector<const SparseTensor*>> by_weight;
  for (const auto& [key, basis] : blocks)
    for (const auto& t : basis) by_weight[weight_of(key)].push_back(&t);

  std::size_t total = 0;
  for (const auto& [w, basis] : by_weight) {
    if (d < 2) {
      total += basis.size();
      continue;
    }
    // Rows: (pair, target code) keys that occur; columns: basis vectors of this weight.
    std::map<std::pair<int, std::uint32_t>, std::size_t> row_index;
    std::vector<std::map<std::pair<int, std::uint32_t>, BigInt>> images(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (const auto& [code, value] : *basis[b]) {
        const Digits digits = decode(code, N, d);
        int pair = 0;
        for (int p = 0; p < d; ++p)
          for (int q = p + 1; q < d; ++q, ++pair) {
            const int pairing = form(digits[p], digits[q]);
            if (pairing == 0) continue;
            Digits rest;
            for (int k = 0; k < d; ++k)
              if (k != p && k != q) rest.push_back(digits[k]);
            const auto key = std::make_pair(pair, encode(rest, N));
            images[b][key] += pairing * value;
            row_index.emplace(key, 0);
          }
      }
    }
    std::size_t next = 0;
    for (auto& [key, index] : row_index) index = next++;
    ExactMatrix m(row_index.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (const auto& [key, value] : images[b]) m(row_index[key], b) = ExactScalar(value);
    total += basis.size() - (row_index.empty() ? 0 : kernel_and_rank(m).rank);
  }
  return total;
}

}  // namespace osp
