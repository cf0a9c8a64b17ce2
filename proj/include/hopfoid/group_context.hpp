#pragma once

#include <string>
#include <vector>

#include "hopfoid/context.hpp"

namespace hopfoid {

// Finite group given by its full multiplication table. validated() checks the
// group axioms outright (closure by construction, two-sided identity, inverses,
// associativity over all triples); the order bound keeps that affordable.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul;
  int identity = -1;
  std::vector<int> inv;

  static constexpr int kMaxOrder = 24;

  int order() const { return static_cast<int>(names.size()); }
  static GroupTable validated(std::vector<std::string> names,
                              std::vector<std::vector<int>> mul);
};

// Group algebra kQ[G]; words are single element indices, all degrees zero.
class GroupContext : public AlgebraContext {
 public:
  GroupContext(GroupTable table, std::string name)
      : AlgebraContext(Kind::group, std::move(name)), g_(std::move(table)) {}

  const GroupTable& table() const { return g_; }

  int word_size() const override { return 1; }
  Word unit_word() const override { return Word{0, {g_.identity}}; }
  long a_degree(const Word&) const override { return 0; }
  long t_degree(const Word&) const override { return 0; }
  std::string word_str(const Word& w) const override { return g_.names[w.data[0]]; }

  NCElement mul_words(const Word& a, const Word& b) const override {
    return element(Word{0, {g_.mul[a.data[0]][b.data[0]]}});
  }

  std::vector<Word> basis(const Window&) const override {
    std::vector<Word> out;
    for (int i = 0; i < g_.order(); ++i) out.push_back(Word{0, {i}});
    return out;
  }

  Word word_of(int i) const { return Word{0, {i}}; }
  Word inverse_word(const Word& w) const { return Word{0, {g_.inv[w.data[0]]}}; }

 private:
  GroupTable g_;
};

}  // namespace hopfoid
