#include "legch/braid.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace legch {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int q = size();
  preimages_.assign(q, 0);
  for (int i = 1; i <= q; ++i) {
    const int s = images_[i - 1];
    if (s < 1 || s > q || preimages_[s - 1] != 0) {
      throw Error("not a permutation of 1.." + std::to_string(q));
    }
    preimages_[s - 1] = i;
  }
}

Permutation Permutation::identity(int q) {
  std::vector<int> images(q);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size() + 1, false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int s = start; !seen[s]; s = (*this)(s)) {
      seen[s] = true;
      cycle.push_back(s);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

// ---------------------------------------------------------------- BraidWord

int BraidWord::position_of(GenId id) const {
  auto it = std::ranges::find(ids_, id);
  if (it == ids_.end()) {
    throw Error("crossing #" + std::to_string(id.value) + " is not in the braid");
  }
  return static_cast<int>(it - ids_.begin()) + 1;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters_[k]);
  }
  return out;
}

BraidWord parse_braid(int q, std::span<const int> letters) {
  if (q < 1) throw Error("strand count must be at least 1, got " + std::to_string(q));
  BraidWord b;
  b.strands_ = q;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const int m = letters[k];
    if (m < 1 || m > q - 1) {
      throw Error("letter " + std::to_string(m) + " at position " +
                  std::to_string(k + 1) + " is out of range 1.." +
                  std::to_string(q - 1));
    }
    b.letters_.push_back(m);
    b.ids_.push_back(GenId{static_cast<std::uint32_t>(k)});
  }
  return b;
}

BraidWord parse_braid(int q, std::string_view text) {
  std::vector<int> letters;
  std::size_t start = 0;
  const bool blank = text.find_first_not_of(" \t") == std::string_view::npos;
  while (!blank && start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error("letter " + std::to_string(letters.size() + 1) + " ('" +
                  std::string(token) + "') is not an integer");
    }
    letters.push_back(value);
    start = end + 1;
  }
  return parse_braid(q, letters);
}

BraidWord torus_braid(int p, int q) {
  if (p < 1) throw Error("torus braid needs p >= 1");
  if (q < 2) throw Error("torus braid needs q >= 2");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(p) * (q - 1));
  for (int n = 1; n <= p; ++n) {
    for (int m = 1; m <= q - 1; ++m) letters.push_back(m);
  }
  BraidWord b = parse_braid(q, letters);
  b.torus_ = TorusShape{p, q};
  return b;
}

BraidWord conjugate_shift(const BraidWord& b) {
  if (b.letters_.empty()) throw Error("cannot conjugate the empty braid word");
  BraidWord out = b;
  std::ranges::rotate(out.letters_, out.letters_.begin() + 1);
  std::ranges::rotate(out.ids_, out.ids_.begin() + 1);
  out.torus_.reset();
  return out;
}

Permutation underlying_permutation(const BraidWord& b) {
  const int q = b.strands();
  std::vector<int> occupant(q + 1);  // left label of the strand at each row
  std::iota(occupant.begin(), occupant.end(), 0);
  for (int m : b.letters()) std::swap(occupant[m], occupant[m + 1]);
  std::vector<int> images(q);
  for (int row = 1; row <= q; ++row) images[occupant[row] - 1] = row;
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------- labels

std::string to_string(const Label& l) {
  return "(" + std::to_string(l.i) + "," + std::to_string(l.j) + "," +
         std::to_string(l.t) + ")";
}

std::string to_string(const TorusCoord& c) {
  return "b[" + std::to_string(c.m) + "," + std::to_string(c.n) + "]";
}

GenId torus_gen(const TorusShape& shape, int m, int n) {
  if (m < 1 || m > shape.q - 1 || n < 1 || n > shape.p) {
    throw Error("no torus crossing b[" + std::to_string(m) + "," +
                std::to_string(n) + "]");
  }
  return GenId{static_cast<std::uint32_t>((n - 1) * (shape.q - 1) + (m - 1))};
}

CrossingTable::CrossingTable(Permutation sigma, std::vector<Crossing> crossings)
    : sigma_(std::move(sigma)), crossings_(std::move(crossings)) {}

const Crossing& CrossingTable::at_position(int position) const {
  if (position < 1 || position > static_cast<int>(crossings_.size())) {
    throw Error("no crossing at position " + std::to_string(position));
  }
  return crossings_[position - 1];
}

const Crossing& CrossingTable::at_id(GenId id) const {
  for (const Crossing& c : crossings_) {
    if (c.id == id) return c;
  }
  throw Error("crossing #" + std::to_string(id.value) + " is not in the braid");
}

std::optional<Crossing> CrossingTable::find(const Label& label) const {
  for (const Crossing& c : crossings_) {
    if (c.label == label) return c;
  }
  return std::nullopt;
}

std::vector<Crossing> CrossingTable::with_pair(int i, int j) const {
  std::vector<Crossing> out;
  for (const Crossing& c : crossings_) {
    if (c.label.i == i && c.label.j == j) out.push_back(c);
  }
  return out;
}

Alphabet CrossingTable::alphabet() const {
  Alphabet names;
  for (const Crossing& c : crossings_) {
    names.name(c.id, to_string(c.label));
    if (c.torus) names.alias(c.id, to_string(*c.torus));
  }
  return names;
}

CrossingTable label_crossings(const BraidWord& b) {
  const int q = b.strands();
  const Permutation sigma = underlying_permutation(b);

  std::vector<int> component(q + 1, 0);
  {
    int index = 0;
    for (const auto& cycle : sigma.cycles()) {
      for (int s : cycle) component[s] = index;
      ++index;
    }
  }

  std::vector<int> occupant(q + 1);
  std::iota(occupant.begin(), occupant.end(), 0);
  std::map<std::pair<int, int>, int> seen;
  std::vector<Crossing> crossings;
  crossings.reserve(b.length());
  for (int pos = 1; pos <= b.length(); ++pos) {
    const int m = b.letter(pos);
    Crossing c;
    c.position = pos;
    c.id = b.id_at(pos);
    c.row = m;
    c.label.i = occupant[m];
    c.label.j = sigma(occupant[m + 1]);
    c.label.t = ++seen[{c.label.i, c.label.j}];
    c.proper = component[occupant[m]] == component[occupant[m + 1]];
    if (b.torus()) {
      const int per_period = q - 1;
      c.torus = TorusCoord{(pos - 1) % per_period + 1, (pos - 1) / per_period + 1};
    }
    crossings.push_back(c);
    std::swap(occupant[m], occupant[m + 1]);
  }
  return CrossingTable(sigma, std::move(crossings));
}

ClosureInvariants closure_invariants(const BraidWord& b) {
  ClosureInvariants out;
  out.tb = b.length() - b.strands();
  out.rotation = 0;
  out.components = static_cast<int>(underlying_permutation(b).cycles().size());
  out.maslov.assign(out.components, 0);
  return out;
}

}  // namespace legch
