#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tder/error.hpp"

namespace tder {

using Element = std::uint32_t;

struct Letter {
  std::uint32_t generator;
  std::int64_t exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

enum class GroupFamily { cyclic, abelian, dihedral, table };

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  std::size_t order() const { return names_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element g, Element h) const { return table_[g * order() + h]; }
  Element inverse(Element g) const { return inverse_[g]; }
  Element power(Element g, std::int64_t k) const;
  std::size_t element_order(Element g) const;
  bool commute(Element g, Element h) const { return mul(g, h) == mul(h, g); }
  bool is_abelian() const;

  const std::string& name(Element g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;

  std::size_t generator_count() const { return generators_.size(); }
  Element generator(std::size_t i) const { return generators_[i]; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  std::optional<std::uint32_t> generator_index(std::string_view name) const;

  const Word& normal_form(Element g) const { return normal_forms_[g]; }
  const std::vector<Word>& relators() const { return relators_; }

  GroupFamily family() const { return family_; }
  // cyclic: {n}; abelian: factor orders; dihedral: {n}; table: empty.
  const std::vector<std::uint32_t>& parameters() const { return params_; }
  std::uint32_t dihedral_n() const;
  std::string description() const;

  // Dihedral listing helpers: a^i b^j has index i + n*j.
  Element rotation(std::int64_t i) const;
  Element reflection(std::int64_t i) const;

  Element evaluate(const Word& w) const;
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;
  // Parses a word and evaluates it.
  Element parse_element(std::string_view text) const;

  friend GroupPtr make_cyclic(std::uint32_t n);
  friend GroupPtr make_abelian(std::vector<std::uint32_t> factors);
  friend GroupPtr make_dihedral(std::uint32_t n);
  friend GroupPtr make_table_group(std::vector<std::string> names,
                                   std::vector<std::vector<Element>> table,
                                   std::vector<std::string> generator_names);

 private:
  FiniteGroup() = default;
  void finish();  // inverses, normal forms, validation

  GroupFamily family_ = GroupFamily::table;
  std::vector<std::uint32_t> params_;
  std::vector<std::string> names_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::vector<Element> generators_;
  std::vector<std::string> generator_names_;
  std::vector<Word> normal_forms_;
  std::vector<Word> relators_;
};

GroupPtr make_cyclic(std::uint32_t n);
GroupPtr make_abelian(std::vector<std::uint32_t> factors);
GroupPtr make_dihedral(std::uint32_t n);
// Table-defined group. Element 0 need not be the identity; it is located.
GroupPtr make_table_group(std::vector<std::string> names, std::vector<std::vector<Element>> table,
                          std::vector<std::string> generator_names);

// Expands exponents into a letter sequence with exponents +-1.
Word expand(const Word& w);
// Merges adjacent letters on the same generator and drops zero exponents.
Word compress(const Word& w);
Word inverse_word(const Word& w);

enum class DihedralFamily { none, minus1, s0, s1, s2, s3, s4, s5 };
std::string to_string(DihedralFamily f);

struct DihedralEndoParams {
  std::uint32_t n = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::uint32_t m = 0;   // order of a^s
  std::uint32_t d = 0;   // n / m
  std::uint32_t j0 = 0;  // t mod s (t when s = 0)
};

DihedralEndoParams dihedral_params(std::uint32_t n, std::uint32_t s, std::uint32_t t);

class Endomorphism {
 public:
  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  Element operator()(Element g) const { return images_[g]; }
  const std::vector<Element>& image_table() const { return images_; }
  const std::vector<Word>& generator_images() const { return generator_images_; }
  bool is_identity() const;
  bool is_trivial() const;

  DihedralFamily dihedral_family() const { return family_; }
  std::optional<std::pair<std::uint32_t, std::uint32_t>> dihedral_st() const { return st_; }
  std::optional<DihedralEndoParams> dihedral_params() const;
  std::string describe() const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.group_ == b.group_ && a.images_ == b.images_;
  }

  friend Expected<Endomorphism> endo_from_images(GroupPtr g, const std::vector<Word>& images);
  friend Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

 private:
  Endomorphism() = default;
  void classify();

  GroupPtr group_;
  std::vector<Element> images_;
  std::vector<Word> generator_images_;
  DihedralFamily family_ = DihedralFamily::none;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> st_;
};

// images[i] is the image word of generator i.
Expected<Endomorphism> endo_from_images(GroupPtr g, const std::vector<Word>& images);
// Keyed by generator name; every generator must be present.
Expected<Endomorphism> endo_from_images(GroupPtr g, const std::map<std::string, std::string>& images);
Endomorphism identity_endomorphism(GroupPtr g);
Endomorphism trivial_endomorphism(GroupPtr g);
// outer after inner
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

// Complete list for dihedral groups, in family order.
std::vector<Endomorphism> enumerate_endomorphisms(GroupPtr g);
// Tries every tuple of generator images; small groups only.
std::vector<Endomorphism> enumerate_endomorphisms_brute(GroupPtr g);

// Dihedral endomorphism a -> a^s, b -> a^t b.
Endomorphism dihedral_rotation_endo(GroupPtr g, std::uint32_t s, std::uint32_t t);
// Cyclic endomorphism x -> x^e.
Endomorphism cyclic_power_endo(GroupPtr g, std::int64_t e);

}  // namespace tder
