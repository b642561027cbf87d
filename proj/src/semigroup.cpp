#include "sgforge/semigroup.hpp"

#include "sgforge/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace sgforge {

NumericalSemigroup::NumericalSemigroup() : members_(1), conductor_(0), genus_(0), generators_{1} {
  members_.set(0);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
  if (gens.empty()) throw InvalidArgument("semigroup needs at least one generator");
  std::vector<int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() <= 0) throw InvalidArgument("generators must be positive");
  int g = 0;
  for (int a : sorted) g = std::gcd(g, a);
  if (g != 1) {
    throw GcdNotOne("gcd of generators is " + std::to_string(g) + ", not 1");
  }

  // Sieve until e consecutive members appear; from there on every integer
  // is reachable by adding e.
  const int e = sorted.front();
  boost::dynamic_bitset<> bits;
  bits.push_back(true);
  int run = 1;
  for (int z = 1; run < e; ++z) {
    bool in = false;
    for (int a : sorted) {
      if (a > z) break;
      if (bits.test(static_cast<std::size_t>(z - a))) {
        in = true;
        break;
      }
    }
    bits.push_back(in);
    run = in ? run + 1 : 0;
  }
  return from_trusted_members(std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_members(const boost::dynamic_bitset<>& bits) {
  if (bits.empty()) return NumericalSemigroup();
  if (!bits.test(0)) throw InvalidArgument("0 must belong to a semigroup");
  const std::size_t n = bits.size();
  for (std::size_t a = 1; 2 * a < n; ++a) {
    if (!bits.test(a)) continue;
    for (std::size_t b = a; a + b < n; ++b) {
      if (bits.test(b) && !bits.test(a + b)) {
        throw InvalidArgument("set is not closed under addition: " + std::to_string(a) + " + " +
                              std::to_string(b));
      }
    }
  }
  return from_trusted_members(bits);
}

NumericalSemigroup NumericalSemigroup::from_trusted_members(boost::dynamic_bitset<> bits) {
  NumericalSemigroup h;
  int frob = -1;
  for (std::size_t z = bits.size(); z-- > 0;) {
    if (!bits.test(z)) {
      frob = static_cast<int>(z);
      break;
    }
  }
  h.conductor_ = frob + 1;
  bits.resize(static_cast<std::size_t>(h.conductor_) + 1, true);
  h.members_ = std::move(bits);
  h.genus_ = h.conductor_ + 1 - static_cast<int>(h.members_.count());

  int e = 1;
  while (!h.contains(e)) ++e;
  h.generators_.clear();
  // Every minimal generator is at most F + e.
  for (int x = e; x <= std::max(h.conductor_ - 1 + e, e); ++x) {
    if (!h.contains(x)) continue;
    bool decomposable = false;
    for (int y = e; 2 * y <= x; ++y) {
      if (h.contains(y) && h.contains(x - y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) h.generators_.push_back(x);
  }
  return h;
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (int z = 1; z < conductor_; ++z) {
    if (!members_.test(static_cast<std::size_t>(z))) out.push_back(z);
  }
  return out;
}

std::vector<int> NumericalSemigroup::small_elements() const {
  std::vector<int> out;
  for (int z = 0; z < conductor_; ++z) {
    if (members_.test(static_cast<std::size_t>(z))) out.push_back(z);
  }
  return out;
}

NumericalSemigroup NumericalSemigroup::without_generator(int a) const {
  if (!std::binary_search(generators_.begin(), generators_.end(), a)) {
    throw NotMember(std::to_string(a) + " is not a minimal generator of " + to_string());
  }
  boost::dynamic_bitset<> bits = members_;
  if (bits.size() <= static_cast<std::size_t>(a)) bits.resize(static_cast<std::size_t>(a) + 1, true);
  bits.reset(static_cast<std::size_t>(a));
  return from_trusted_members(std::move(bits));
}

CoreInvariants NumericalSemigroup::invariants() const {
  CoreInvariants inv;
  inv.multiplicity = multiplicity();
  inv.embedding_dim = embedding_dimension();
  inv.type = sgforge::type(*this);
  inv.genus = genus_;
  inv.frobenius = frobenius();
  inv.conductor = conductor_;
  inv.n_of_h = conductor_ - genus_;
  return inv;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ',';
    os << generators_[i];
  }
  os << '>';
  return os.str();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw InvalidArgument("empty integer list");
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("bad integer '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
  for (char ch : text) {
    if (ch != ',' && (ch < '0' || ch > '9')) {
      throw InvalidArgument("semigroup must match \\d+(,\\d+)*: '" + std::string(text) + "'");
    }
  }
  return NumericalSemigroup::from_generators(parse_int_list(text));
}

std::vector<int> apery_set(const NumericalSemigroup& h, int n) {
  if (n <= 0 || !h.contains(n)) {
    throw NotMember(std::to_string(n) + " is not a nonzero element of " + h.to_string());
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int z = i;
    while (!h.contains(z)) z += n;
    w[static_cast<std::size_t>(i)] = z;
  }
  return w;
}

std::vector<int> pseudo_frobenius(const NumericalSemigroup& h) {
  if (h.is_full()) return {-1};
  std::vector<int> pf;
  for (int a : h.gaps()) {
    // Closure under the minimal generators suffices.
    bool ok = std::all_of(h.min_generators().begin(), h.min_generators().end(),
                          [&](int g) { return h.contains(a + g); });
    if (ok) pf.push_back(a);
  }
  return pf;
}

int type(const NumericalSemigroup& h) { return static_cast<int>(pseudo_frobenius(h).size()); }

bool is_symmetric(const NumericalSemigroup& h) { return 2 * h.genus() == h.conductor(); }

bool has_minimal_multiplicity(const NumericalSemigroup& h) {
  return h.multiplicity() == h.embedding_dimension();
}

NumericalSemigroup unitary_extension(const NumericalSemigroup& s) {
  if (s.is_full()) throw AlreadyFull("the semigroup of naturals has no Frobenius number to add");
  boost::dynamic_bitset<> bits(static_cast<std::size_t>(s.conductor()) + 1);
  for (int z = 0; z <= s.conductor(); ++z) {
    if (s.contains(z)) bits.set(static_cast<std::size_t>(z));
  }
  bits.set(static_cast<std::size_t>(s.frobenius()));
  return NumericalSemigroup::from_members(bits);
}

}  // namespace sgforge
