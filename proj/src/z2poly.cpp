#include "legch/z2poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace legch {

namespace detail {
struct WordNode {
  std::vector<GenId> letters;
  std::uint64_t hash = 0;
  std::uint64_t radix_power = 1;  // kRadix^size, for hashing concatenations
};
}  // namespace detail

namespace {

using detail::WordNode;

constexpr std::uint64_t kRadix = 0x100000001b3ull;

std::uint64_t mix_letter(GenId g) {
  std::uint64_t z = g.value + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Polynomial hash, so hash(xy) = hash(x) * kRadix^|y| + hash(y).
std::uint64_t hash_letters(std::span<const GenId> letters) {
  std::uint64_t h = 0;
  for (GenId g : letters) h = h * kRadix + mix_letter(g);
  return h;
}

std::uint64_t radix_power(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < n; ++k) r *= kRadix;
  return r;
}

// Append-only interning table. Nodes live in a deque and are never moved, so
// a published pointer stays valid for the lifetime of the process.
class WordPool {
 public:
  const WordNode* intern(std::span<const GenId> letters) {
    const std::uint64_t h = hash_letters(letters);
    {
      std::shared_lock lock(mu_);
      if (const WordNode* n = find_locked(letters, h)) return n;
    }
    std::unique_lock lock(mu_);
    if (const WordNode* n = find_locked(letters, h)) return n;
    WordNode& node = storage_.emplace_back();
    node.letters.assign(letters.begin(), letters.end());
    node.hash = h;
    node.radix_power = radix_power(letters.size());
    buckets_[h].push_back(&node);
    return &node;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return storage_.size();
  }

 private:
  const WordNode* find_locked(std::span<const GenId> letters,
                              std::uint64_t h) const {
    auto it = buckets_.find(h);
    if (it == buckets_.end()) return nullptr;
    for (const WordNode* n : it->second) {
      if (std::ranges::equal(n->letters, letters)) return n;
    }
    return nullptr;
  }

  mutable std::shared_mutex mu_;
  std::deque<WordNode> storage_;
  std::unordered_map<std::uint64_t, std::vector<const WordNode*>> buckets_;
};

WordPool& pool() {
  static WordPool instance;
  return instance;
}

const WordNode* empty_node() {
  static const WordNode* node = pool().intern({});
  return node;
}

// Sorts by interned identity, drops pairs, then restores canonical order.
std::vector<Word> reduce_mod2(std::vector<Word> terms) {
  std::ranges::sort(terms, std::less<>{},
                    [](Word w) { return w.identity(); });
  std::vector<Word> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  std::ranges::sort(out, canonical_less);
  return out;
}

}  // namespace

namespace detail {

// Open-addressing table of words x*y with a parity bit, keyed by the
// concatenation hash. Words that cancel are never interned.
class ProductTable {
 public:
  explicit ProductTable(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected && cap < (std::size_t{1} << 22)) cap <<= 1;
    slots_.resize(cap);
  }

  void toggle(Word x, Word y) { toggle(x.node_, y.node_); }

  void toggle_product(const Poly& a, const Poly& b) {
    for (Word x : a.terms()) {
      for (Word y : b.terms()) toggle(x, y);
    }
  }

  std::vector<Word> survivors() const {
    std::vector<Word> out;
    std::vector<GenId> buffer;
    for (const Slot& s : slots_) {
      if (!s.left || !s.odd) continue;
      buffer.assign(s.left->letters.begin(), s.left->letters.end());
      buffer.insert(buffer.end(), s.right->letters.begin(), s.right->letters.end());
      out.push_back(Word::of(buffer));
    }
    std::ranges::sort(out, canonical_less);
    return out;
  }

 private:
  struct Slot {
    std::uint64_t hash = 0;
    const WordNode* left = nullptr;
    const WordNode* right = nullptr;
    bool odd = false;
  };

  static bool same_word(const Slot& s, const WordNode* x, const WordNode* y) {
    const std::size_t n = x->letters.size() + y->letters.size();
    if (s.left->letters.size() + s.right->letters.size() != n) return false;
    auto at = [](const WordNode* a, const WordNode* b, std::size_t k) {
      return k < a->letters.size() ? a->letters[k] : b->letters[k - a->letters.size()];
    };
    for (std::size_t k = 0; k < n; ++k) {
      if (at(s.left, s.right, k) != at(x, y, k)) return false;
    }
    return true;
  }

  void toggle(const WordNode* x, const WordNode* y) {
    const std::uint64_t h = x->hash * y->radix_power + y->hash;
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = (h ^ (h >> 29)) & mask;; i = (i + 1) & mask) {
      Slot& s = slots_[i];
      if (!s.left) {
        s = {h, x, y, true};
        if (++used_ * 2 > slots_.size()) grow();
        return;
      }
      if (s.hash == h && same_word(s, x, y)) {
        s.odd = !s.odd;
        return;
      }
    }
  }

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    const std::size_t mask = slots_.size() - 1;
    for (const Slot& s : old) {
      if (!s.left || !s.odd) continue;
      std::size_t i = (s.hash ^ (s.hash >> 29)) & mask;
      while (slots_[i].left) i = (i + 1) & mask;
      slots_[i] = s;
    }
    used_ = 0;
    for (const Slot& s : slots_) used_ += s.left ? 1 : 0;
  }

  std::vector<Slot> slots_;
  std::size_t used_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------- Word

Word::Word() : node_(empty_node()) {}

Word Word::of(std::span<const GenId> letters) {
  return Word(pool().intern(letters));
}

Word Word::letter(GenId g) { return of(std::span<const GenId>(&g, 1)); }

std::span<const GenId> Word::letters() const { return node_->letters; }
std::size_t Word::size() const { return node_->letters.size(); }
std::size_t Word::hash() const { return node_->hash; }

Word operator*(Word a, Word b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  thread_local std::vector<GenId> buffer;
  buffer.clear();
  buffer.insert(buffer.end(), a.node_->letters.begin(), a.node_->letters.end());
  buffer.insert(buffer.end(), b.node_->letters.begin(), b.node_->letters.end());
  return Word::of(buffer);
}

bool canonical_less(Word a, Word b) {
  if (a == b) return false;
  if (a.size() != b.size()) return a.size() < b.size();
  return std::ranges::lexicographical_compare(a.letters(), b.letters());
}

std::size_t interned_word_count() { return pool().size(); }

// ---------------------------------------------------------------- Assignment

void Assignment::set(GenId g, bool v) {
  if (g.value >= values_.size()) values_.resize(g.value + 1, -1);
  values_[g.value] = v ? 1 : 0;
}

std::optional<bool> Assignment::find(GenId g) const {
  if (g.value >= values_.size() || values_[g.value] < 0) return std::nullopt;
  return values_[g.value] == 1;
}

bool Assignment::at(GenId g) const {
  auto v = find(g);
  if (!v) {
    throw Error("generator #" + std::to_string(g.value) +
                " has no value in the assignment");
  }
  return *v;
}

std::vector<GenId> Assignment::domain() const {
  std::vector<GenId> out;
  for (std::uint32_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= 0) out.push_back(GenId{i});
  }
  return out;
}

// ---------------------------------------------------------------- Poly

Poly Poly::one() { return monomial(Word()); }

Poly Poly::gen(GenId g) { return monomial(Word::letter(g)); }

Poly Poly::monomial(Word w) {
  Poly p;
  p.terms_.push_back(w);
  return p;
}

Poly Poly::from_terms(std::vector<Word> terms) {
  Poly p;
  p.terms_ = reduce_mod2(std::move(terms));
  return p;
}

Poly Poly::from_sorted_terms(std::vector<Word> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::contains(Word w) const {
  return std::ranges::binary_search(terms_, w, canonical_less);
}

bool Poly::mentions(GenId g) const {
  for (Word w : terms_) {
    if (std::ranges::find(w.letters(), g) != w.letters().end()) return true;
  }
  return false;
}

std::vector<GenId> Poly::generators() const {
  std::vector<GenId> out;
  for (Word w : terms_) out.insert(out.end(), w.letters().begin(), w.letters().end());
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (*i == *j) {
      ++i;
      ++j;
    } else if (canonical_less(*i, *j)) {
      out.terms_.push_back(*i++);
    } else {
      out.terms_.push_back(*j++);
    }
  }
  out.terms_.insert(out.terms_.end(), i, a.terms_.end());
  out.terms_.insert(out.terms_.end(), j, b.terms_.end());
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return multiply_add(Poly::zero(), a, b);
}

Poly multiply_add(const Poly& acc, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return acc;
  detail::ProductTable table(acc.size() + a.size() * b.size());
  table.toggle_product(acc, Poly::one());
  table.toggle_product(a, b);
  return Poly::from_sorted_terms(table.survivors());
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

// ---------------------------------------------------------------- maps

const Poly& GeneratorMap::image(GenId g) const {
  auto it = images_.find(g);
  if (it == images_.end()) {
    throw Error("generator #" + std::to_string(g.value) +
                " is not in the domain of the substitution");
  }
  return it->second;
}

Poly substitute(const Poly& p, const GeneratorMap& phi) {
  detail::ProductTable table(p.size());
  const Poly one = Poly::one();
  for (Word w : p.terms()) {
    auto letters = w.letters();
    if (letters.empty()) {
      table.toggle_product(one, one);
      continue;
    }
    Poly acc = one;
    for (std::size_t k = 0; k + 1 < letters.size() && !acc.is_zero(); ++k) {
      acc = acc * phi.image(letters[k]);
    }
    table.toggle_product(acc, phi.image(letters.back()));
  }
  return Poly::from_sorted_terms(table.survivors());
}

GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second) {
  GeneratorMap out;
  for (const auto& [g, img] : first.images()) out.set(g, substitute(img, second));
  return out;
}

Poly apply_derivation(const Poly& p, const GeneratorMap& d) {
  std::vector<Word> all;
  for (Word w : p.terms()) {
    auto letters = w.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const Poly& dg = d.image(letters[k]);
      if (dg.is_zero()) continue;
      const Word prefix = Word::of(letters.first(k));
      const Word suffix = Word::of(letters.subspan(k + 1));
      for (Word x : dg.terms()) all.push_back(prefix * x * suffix);
    }
  }
  return Poly::from_terms(std::move(all));
}

bool evaluate(const Poly& p, const Assignment& eps) {
  bool sum = false;
  for (Word w : p.terms()) {
    bool prod = true;
    for (GenId g : w.letters()) {
      if (!eps.at(g)) {
        prod = false;
        break;
      }
    }
    sum = sum != prod;
  }
  return sum;
}

Assignment pull_back(const Assignment& eps, const GeneratorMap& phi) {
  Assignment out;
  for (const auto& [g, img] : phi.images()) out.set(g, evaluate(img, eps));
  return out;
}

GeneratorMap lift(const Assignment& eps) {
  GeneratorMap out;
  for (GenId g : eps.domain()) out.set(g, eps.at(g) ? Poly::one() : Poly::zero());
  return out;
}

// ---------------------------------------------------------------- naming

void Alphabet::name(GenId g, std::string primary) {
  lookup_[primary] = g;
  names_[g] = std::move(primary);
}

void Alphabet::alias(GenId g, std::string extra) { lookup_[std::move(extra)] = g; }

const std::string& Alphabet::name_of(GenId g) const {
  auto it = names_.find(g);
  if (it == names_.end()) {
    throw Error("generator #" + std::to_string(g.value) + " has no name");
  }
  return it->second;
}

std::optional<GenId> Alphabet::lookup(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

GenId Alphabet::resolve(std::string_view name) const {
  if (auto g = lookup(name)) return *g;
  throw Error("unknown generator '" + std::string(name) + "'");
}

std::vector<GenId> Alphabet::generators() const {
  std::vector<GenId> out;
  for (const auto& [g, n] : names_) out.push_back(g);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\n\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\n\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

std::string render(const Poly& p, const Alphabet& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first_term = true;
  for (Word w : p.terms()) {
    if (!first_term) out << " + ";
    first_term = false;
    if (w.empty()) {
      out << '1';
      continue;
    }
    bool first_letter = true;
    for (GenId g : w.letters()) {
      if (!first_letter) out << '*';
      first_letter = false;
      out << names.name_of(g);
    }
  }
  return out.str();
}

Poly parse_poly(std::string_view text, const Alphabet& names) {
  text = trim(text);
  if (text.empty()) throw Error("empty polynomial text");
  if (text == "0") return {};
  std::vector<Word> terms;
  for (std::string_view term : split(text, '+')) {
    if (term.empty()) throw Error("empty term in '" + std::string(text) + "'");
    if (term == "1") {
      terms.emplace_back();
      continue;
    }
    std::vector<GenId> letters;
    for (std::string_view letter : split(term, '*')) {
      letters.push_back(names.resolve(letter));
    }
    terms.push_back(Word::of(letters));
  }
  return Poly::from_terms(std::move(terms));
}

nlohmann::ordered_json to_json(const Poly& p, const Alphabet& names) {
  auto terms = nlohmann::ordered_json::array();
  for (Word w : p.terms()) {
    auto word = nlohmann::ordered_json::array();
    for (GenId g : w.letters()) word.push_back(names.name_of(g));
    terms.push_back(std::move(word));
  }
  nlohmann::ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

Poly poly_from_json(const nlohmann::json& j, const Alphabet& names) {
  if (!j.is_object()) throw Error("polynomial JSON must be an object");
  auto it = j.find("terms");
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_array()) throw Error("\"terms\" must be an array");
  std::vector<Word> terms;
  for (const auto& word : *it) {
    if (!word.is_array()) throw Error("each term must be an array of generators");
    std::vector<GenId> letters;
    for (const auto& g : word) letters.push_back(names.resolve(g.get<std::string>()));
    terms.push_back(Word::of(letters));
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace legch
