#include <omp.h>

#include <algorithm>
#include <limits>

#include "icsi/kernels.hpp"

namespace icsi::kernels {

namespace {

std::uint64_t message_count(const Matrix& g) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.rows(); ++i) total *= g.f().order();
  return total;
}

struct Chunk {
  std::uint64_t begin;
  std::uint64_t end;
};

std::vector<Chunk> partition(std::uint64_t total) {
  const std::uint64_t pieces =
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(omp_get_max_threads()) * 8, 1, std::max<std::uint64_t>(total, 1));
  std::vector<Chunk> chunks;
  chunks.reserve(pieces);
  for (std::uint64_t i = 0; i < pieces; ++i) chunks.push_back({total * i / pieces, total * (i + 1) / pieces});
  return chunks;
}

std::size_t weight_of(std::span<const elem_t> w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](elem_t v) { return v != 0; }));
}

std::uint64_t tuple_index(std::span<const elem_t> word, std::span<const std::size_t> columns, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (std::size_t c : columns) idx = idx * q + word[c];
  return idx;
}

std::uint64_t tuple_space(std::uint32_t q, std::size_t arity) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < arity; ++i) s *= q;
  return s;
}

}  // namespace

CodewordCursor::CodewordCursor(const Matrix& generator, std::uint64_t start)
    : g_(&generator), f_(&generator.f()), index_(start), digits_(generator.rows(), 0), word_(generator.cols(), 0) {
  const std::uint32_t q = f_->order();
  std::uint64_t rest = start;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    digits_[i] = static_cast<elem_t>(rest % q);
    rest /= q;
    if (digits_[i] == 0) continue;
    const auto row = g_->row(i);
    for (std::size_t c = 0; c < word_.size(); ++c) word_[c] = f_->add(word_[c], f_->mul(digits_[i], row[c]));
  }
}

void CodewordCursor::advance() {
  ++index_;
  const std::uint32_t q = f_->order();
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    const elem_t old = digits_[i];
    const elem_t next = static_cast<elem_t>(old + 1U == q ? 0 : old + 1);
    digits_[i] = next;
    const elem_t delta = f_->sub(next, old);
    const auto row = g_->row(i);
    for (std::size_t c = 0; c < word_.size(); ++c)
      if (row[c] != 0) word_[c] = f_->add(word_[c], f_->mul(delta, row[c]));
    if (next != 0) break;
  }
}

namespace serial {

std::vector<std::uint64_t> weight_counts(const Matrix& g) {
  std::vector<std::uint64_t> counts(g.cols() + 1, 0);
  const std::uint64_t total = message_count(g);
  CodewordCursor cur(g, 0);
  for (std::uint64_t i = 0; i < total; ++i, cur.advance()) ++counts[weight_of(cur.word())];
  return counts;
}

std::vector<std::uint64_t> tuple_counts(const Matrix& g, std::span<const std::size_t> columns) {
  const std::uint32_t q = g.f().order();
  std::vector<std::uint64_t> counts(tuple_space(q, columns.size()), 0);
  const std::uint64_t total = message_count(g);
  CodewordCursor cur(g, 0);
  for (std::uint64_t i = 0; i < total; ++i, cur.advance()) ++counts[tuple_index(cur.word(), columns, q)];
  return counts;
}

std::optional<std::uint64_t> first_of_weight(const Matrix& g, std::size_t w) {
  const std::uint64_t total = message_count(g);
  CodewordCursor cur(g, 0);
  for (std::uint64_t i = 0; i < total; ++i, cur.advance())
    if (weight_of(cur.word()) == w) return i;
  return std::nullopt;
}

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> weight_counts(const Matrix& g) {
  const auto chunks = partition(message_count(g));
  std::vector<std::vector<std::uint64_t>> partial(chunks.size(), std::vector<std::uint64_t>(g.cols() + 1, 0));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
    auto& counts = partial[ci];
    CodewordCursor cur(g, chunks[ci].begin);
    for (std::uint64_t i = chunks[ci].begin; i < chunks[ci].end; ++i, cur.advance()) ++counts[weight_of(cur.word())];
  }
  std::vector<std::uint64_t> counts(g.cols() + 1, 0);
  for (const auto& p : partial)
    for (std::size_t w = 0; w < counts.size(); ++w) counts[w] += p[w];
  return counts;
}

std::vector<std::uint64_t> tuple_counts(const Matrix& g, std::span<const std::size_t> columns) {
  const std::uint32_t q = g.f().order();
  const std::uint64_t space = tuple_space(q, columns.size());
  const auto chunks = partition(message_count(g));
  std::vector<std::uint64_t> counts(space, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(space, 0);
#pragma omp for schedule(dynamic)
    for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
      CodewordCursor cur(g, chunks[ci].begin);
      for (std::uint64_t i = chunks[ci].begin; i < chunks[ci].end; ++i, cur.advance())
        ++local[tuple_index(cur.word(), columns, q)];
    }
#pragma omp critical(icsi_tuple_merge)
    for (std::uint64_t t = 0; t < space; ++t) counts[t] += local[t];
  }
  return counts;
}

std::optional<std::uint64_t> first_of_weight(const Matrix& g, std::size_t w) {
  const auto chunks = partition(message_count(g));
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> found(chunks.size(), kNone);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t ci = 0; ci < chunks.size(); ++ci) {
    CodewordCursor cur(g, chunks[ci].begin);
    for (std::uint64_t i = chunks[ci].begin; i < chunks[ci].end; ++i, cur.advance()) {
      if (weight_of(cur.word()) == w) {
        found[ci] = i;
        break;
      }
    }
  }
  for (std::uint64_t f : found)
    if (f != kNone) return f;
  return std::nullopt;
}

}  // namespace omp

}  // namespace icsi::kernels
