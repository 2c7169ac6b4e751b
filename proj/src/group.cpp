#include "caygraph/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace caygraph {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t level_sign(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

[[noreturn]] void mismatch(const MarkedGroupSpec& spec) {
  throw std::domain_error("group element does not belong to family " + spec.name());
}

}  // namespace

bool GroupElement::Letter::operator==(const Letter& o) const {
  if (side != o.side) return false;
  if (!elem || !o.elem) return elem == o.elem;
  return *elem == *o.elem;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::GammaSec2: return "gamma-sec2";
    case Family::DeltaSec2: return "delta-sec2";
    case Family::GammaK: return "gamma-k";
    case Family::DeltaK: return "delta-k";
    case Family::GammaPrimeK: return "gamma-prime-k";
    case Family::DeltaPrimeK: return "delta-prime-k";
    case Family::ZxZ: return "z-x-z";
    case Family::ZsemiZ: return "z-semi-z";
    case Family::FreeProduct: return "free-product";
    case Family::CyclicZ: return "cyclic";
    case Family::PlainZ: return "plain-z";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  static const std::pair<const char*, Family> table[] = {
      {"gamma-sec2", Family::GammaSec2}, {"delta-sec2", Family::DeltaSec2},
      {"gamma-k", Family::GammaK},       {"delta-k", Family::DeltaK},
      {"gamma-prime-k", Family::GammaPrimeK},
      {"delta-prime-k", Family::DeltaPrimeK},
      {"z-x-z", Family::ZxZ},            {"z-semi-z", Family::ZsemiZ},
      {"free-product", Family::FreeProduct},
      {"cyclic", Family::CyclicZ},       {"plain-z", Family::PlainZ},
  };
  for (const auto& [n, f] : table)
    if (name == n) return f;
  throw std::invalid_argument("unknown family name: " + name);
}

std::string GroupElement::label() const {
  std::ostringstream os;
  if (is_fiber()) {
    os << as_fiber().i << "," << as_fiber().n;
  } else if (is_line()) {
    os << as_line().pos;
  } else if (is_dihedral()) {
    const auto& d = as_dihedral();
    if (d.t == 0 && d.eps == 0) {
      os << "e";
    } else {
      // render the reduced word
      std::int64_t iota = dihedral_line_coordinate(*this);
      std::int64_t len = iota >= 0 ? iota : -iota;
      char last = iota > 0 ? 'a' : 'b';
      std::string w(static_cast<std::size_t>(len), '?');
      for (std::int64_t j = len - 1; j >= 0; --j) {
        w[static_cast<std::size_t>(j)] = last;
        last = (last == 'a') ? 'b' : 'a';
      }
      os << w;
    }
  } else if (is_pair()) {
    os << as_pair().a << "," << as_pair().b;
  } else {
    const auto& w = as_alt_word();
    if (w.letters.empty()) {
      os << "e";
    } else {
      bool first = true;
      for (const auto& l : w.letters) {
        if (!first) os << ".";
        first = false;
        os << (l.side == 0 ? "L" : "R") << l.elem->label();
      }
    }
  }
  return os.str();
}

MarkedGroupSpec MarkedGroupSpec::make(Family f, int k) {
  MarkedGroupSpec s;
  s.family = f;
  s.k = k;
  validate_spec(s);
  return s;
}

MarkedGroupSpec MarkedGroupSpec::cyclic(int modulus) {
  MarkedGroupSpec s;
  s.family = Family::CyclicZ;
  s.modulus = modulus;
  validate_spec(s);
  return s;
}

MarkedGroupSpec MarkedGroupSpec::plain_z() {
  MarkedGroupSpec s;
  s.family = Family::PlainZ;
  return s;
}

MarkedGroupSpec MarkedGroupSpec::free_product(MarkedGroupSpec l, MarkedGroupSpec r) {
  MarkedGroupSpec s;
  s.family = Family::FreeProduct;
  s.left = std::make_shared<MarkedGroupSpec>(std::move(l));
  s.right = std::make_shared<MarkedGroupSpec>(std::move(r));
  validate_spec(s);
  return s;
}

bool MarkedGroupSpec::is_fiber_family() const {
  switch (family) {
    case Family::GammaSec2:
    case Family::DeltaSec2:
    case Family::GammaK:
    case Family::DeltaK:
      return true;
    default:
      return false;
  }
}

bool MarkedGroupSpec::is_line_family() const {
  switch (family) {
    case Family::GammaPrimeK:
    case Family::DeltaPrimeK:
    case Family::CyclicZ:
    case Family::PlainZ:
      return true;
    default:
      return false;
  }
}

int MarkedGroupSpec::fiber_size() const {
  if (!is_fiber_family()) throw std::domain_error("fiber_size: not a fiber family");
  return k;
}

bool MarkedGroupSpec::operator==(const MarkedGroupSpec& o) const {
  if (family != o.family || k != o.k || modulus != o.modulus) return false;
  if (family == Family::FreeProduct) {
    return left && o.left && right && o.right && *left == *o.left && *right == *o.right;
  }
  return true;
}

std::string MarkedGroupSpec::name() const {
  std::ostringstream os;
  os << family_name(family);
  switch (family) {
    case Family::GammaK:
    case Family::DeltaK:
    case Family::GammaPrimeK:
    case Family::DeltaPrimeK:
      os << "(k=" << k << ")";
      break;
    case Family::CyclicZ:
      os << ":" << modulus;
      break;
    case Family::FreeProduct:
      os << "(" << left->name() << " * " << right->name() << ")";
      break;
    default:
      break;
  }
  return os.str();
}

void validate_spec(const MarkedGroupSpec& spec) {
  switch (spec.family) {
    case Family::GammaSec2:
    case Family::DeltaSec2:
      if (spec.k != 3) throw std::invalid_argument("k must be 3 for the sec2 families");
      break;
    case Family::GammaK:
    case Family::DeltaK:
    case Family::GammaPrimeK:
    case Family::DeltaPrimeK:
      if (spec.k < 3) throw std::invalid_argument("k must be >= 3");
      break;
    case Family::CyclicZ:
      if (spec.modulus < 2) throw std::invalid_argument("cyclic modulus must be >= 2");
      break;
    case Family::FreeProduct:
      if (!spec.left || !spec.right)
        throw std::invalid_argument("free product needs two factors");
      if (spec.left->family != Family::CyclicZ || spec.right->family != Family::CyclicZ)
        throw std::invalid_argument("free product factors must be finite cyclic groups");
      validate_spec(*spec.left);
      validate_spec(*spec.right);
      break;
    default:
      break;
  }
}

GroupElement identity(const MarkedGroupSpec& spec) {
  switch (spec.family) {
    case Family::GammaSec2:
    case Family::DeltaSec2:
    case Family::GammaK:
    case Family::DeltaK:
      return GroupElement::fiber(0, 0);
    case Family::GammaPrimeK:
    case Family::CyclicZ:
    case Family::PlainZ:
      return GroupElement::line(0);
    case Family::DeltaPrimeK:
      return GroupElement::dihedral(0, 0);
    case Family::ZxZ:
    case Family::ZsemiZ:
      return GroupElement::pair(0, 0);
    case Family::FreeProduct:
      return GroupElement(GroupElement::AltWord{});
  }
  throw std::logic_error("unknown family");
}

bool is_identity(const GroupElement& g) {
  if (g.is_fiber()) return g.as_fiber().i == 0 && g.as_fiber().n == 0;
  if (g.is_line()) return g.as_line().pos == 0;
  if (g.is_dihedral()) return g.as_dihedral().t == 0 && g.as_dihedral().eps == 0;
  if (g.is_pair()) return g.as_pair().a == 0 && g.as_pair().b == 0;
  return g.as_alt_word().letters.empty();
}

namespace {

GroupElement mul_alt_word(const GroupElement& g, const GroupElement& h,
                          const MarkedGroupSpec& spec) {
  const auto& factor = [&](int side) -> const MarkedGroupSpec& {
    return side == 0 ? *spec.left : *spec.right;
  };
  std::vector<GroupElement::Letter> out = g.as_alt_word().letters;
  const auto& rhs = h.as_alt_word().letters;
  std::size_t j = 0;
  while (j < rhs.size()) {
    if (out.empty() || out.back().side != rhs[j].side) {
      out.push_back(rhs[j]);
      ++j;
    } else {
      GroupElement prod = mul(*out.back().elem, *rhs[j].elem, factor(out.back().side));
      if (is_identity(prod)) {
        out.pop_back();
      } else {
        out.back().elem = std::make_shared<GroupElement>(std::move(prod));
      }
      ++j;
    }
  }
  return GroupElement(GroupElement::AltWord{std::move(out)});
}

}  // namespace

GroupElement mul(const GroupElement& g, const GroupElement& h, const MarkedGroupSpec& spec) {
  switch (spec.family) {
    case Family::GammaSec2:
    case Family::GammaK: {
      if (!g.is_fiber() || !h.is_fiber()) mismatch(spec);
      const auto& a = g.as_fiber();
      const auto& b = h.as_fiber();
      return GroupElement::fiber(mod(a.i + b.i, spec.k), a.n + b.n);
    }
    case Family::DeltaSec2:
    case Family::DeltaK: {
      if (!g.is_fiber() || !h.is_fiber()) mismatch(spec);
      const auto& a = g.as_fiber();
      const auto& b = h.as_fiber();
      return GroupElement::fiber(mod(a.i + level_sign(a.n) * b.i, spec.k), a.n + b.n);
    }
    case Family::GammaPrimeK:
    case Family::PlainZ: {
      if (!g.is_line() || !h.is_line()) mismatch(spec);
      return GroupElement::line(g.as_line().pos + h.as_line().pos);
    }
    case Family::CyclicZ: {
      if (!g.is_line() || !h.is_line()) mismatch(spec);
      return GroupElement::line(mod(g.as_line().pos + h.as_line().pos, spec.modulus));
    }
    case Family::DeltaPrimeK: {
      if (!g.is_dihedral() || !h.is_dihedral()) mismatch(spec);
      const auto& x = g.as_dihedral();
      const auto& y = h.as_dihedral();
      if (x.eps == 0) return GroupElement::dihedral(x.t + y.t, y.eps);
      return GroupElement::dihedral(x.t - y.t, 1 - y.eps);
    }
    case Family::ZxZ: {
      if (!g.is_pair() || !h.is_pair()) mismatch(spec);
      return GroupElement::pair(g.as_pair().a + h.as_pair().a, g.as_pair().b + h.as_pair().b);
    }
    case Family::ZsemiZ: {
      if (!g.is_pair() || !h.is_pair()) mismatch(spec);
      const auto& x = g.as_pair();
      const auto& y = h.as_pair();
      return GroupElement::pair(x.a + level_sign(x.b) * y.a, x.b + y.b);
    }
    case Family::FreeProduct: {
      if (!g.is_alt_word() || !h.is_alt_word()) mismatch(spec);
      return mul_alt_word(g, h, spec);
    }
  }
  throw std::logic_error("unknown family");
}

GroupElement inverse(const GroupElement& g, const MarkedGroupSpec& spec) {
  switch (spec.family) {
    case Family::GammaSec2:
    case Family::GammaK: {
      if (!g.is_fiber()) mismatch(spec);
      return GroupElement::fiber(mod(-g.as_fiber().i, spec.k), -g.as_fiber().n);
    }
    case Family::DeltaSec2:
    case Family::DeltaK: {
      if (!g.is_fiber()) mismatch(spec);
      const auto& a = g.as_fiber();
      return GroupElement::fiber(mod(-level_sign(a.n) * a.i, spec.k), -a.n);
    }
    case Family::GammaPrimeK:
    case Family::PlainZ:
      if (!g.is_line()) mismatch(spec);
      return GroupElement::line(-g.as_line().pos);
    case Family::CyclicZ:
      if (!g.is_line()) mismatch(spec);
      return GroupElement::line(mod(-g.as_line().pos, spec.modulus));
    case Family::DeltaPrimeK: {
      if (!g.is_dihedral()) mismatch(spec);
      const auto& d = g.as_dihedral();
      if (d.eps == 0) return GroupElement::dihedral(-d.t, 0);
      return g;  // reflections are involutions
    }
    case Family::ZxZ:
      if (!g.is_pair()) mismatch(spec);
      return GroupElement::pair(-g.as_pair().a, -g.as_pair().b);
    case Family::ZsemiZ: {
      if (!g.is_pair()) mismatch(spec);
      const auto& x = g.as_pair();
      return GroupElement::pair(-level_sign(x.b) * x.a, -x.b);
    }
    case Family::FreeProduct: {
      if (!g.is_alt_word()) mismatch(spec);
      const auto& w = g.as_alt_word().letters;
      std::vector<GroupElement::Letter> out;
      out.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const MarkedGroupSpec& f = it->side == 0 ? *spec.left : *spec.right;
        out.push_back({it->side, std::make_shared<GroupElement>(inverse(*it->elem, f))});
      }
      return GroupElement(GroupElement::AltWord{std::move(out)});
    }
  }
  throw std::logic_error("unknown family");
}

std::vector<GroupElement> generator_set(const MarkedGroupSpec& spec) {
  validate_spec(spec);
  std::vector<GroupElement> gens;
  switch (spec.family) {
    case Family::GammaSec2:
    case Family::DeltaSec2:
      gens = {GroupElement::fiber(1, 0), GroupElement::fiber(2, 0),
              GroupElement::fiber(0, 1), GroupElement::fiber(0, -1)};
      break;
    case Family::GammaK:
    case Family::DeltaK: {
      const int k = spec.k;
      for (int i = 1; i < k; ++i) gens.push_back(GroupElement::fiber(i, 0));
      for (int i = 2; i < k; ++i) gens.push_back(GroupElement::fiber(i, 1));
      for (int i = 2; i < k; ++i)
        gens.push_back(inverse(GroupElement::fiber(i, 1), spec));
      break;
    }
    case Family::GammaPrimeK:
      for (int d = 2; d <= 2 * spec.k - 3; ++d) {
        gens.push_back(GroupElement::line(d));
        gens.push_back(GroupElement::line(-d));
      }
      break;
    case Family::DeltaPrimeK:
      // the alternating words of length 2..2k-3
      for (int len = 2; len <= 2 * spec.k - 3; ++len) {
        if (len % 2 == 0) {
          gens.push_back(GroupElement::dihedral(len / 2, 0));    // (ab)^j
          gens.push_back(GroupElement::dihedral(-len / 2, 0));   // (ba)^j
        } else {
          gens.push_back(GroupElement::dihedral(len / 2, 1));        // (ab)^j a
          gens.push_back(GroupElement::dihedral(-len / 2 - 1, 1));   // (ba)^j b
        }
      }
      break;
    case Family::ZxZ:
    case Family::ZsemiZ:
      gens = {GroupElement::pair(2, 0),  GroupElement::pair(-2, 0),
              GroupElement::pair(3, 0),  GroupElement::pair(-3, 0),
              GroupElement::pair(0, 1),  GroupElement::pair(0, -1)};
      break;
    case Family::CyclicZ: {
      gens.push_back(GroupElement::line(1));
      GroupElement minus = GroupElement::line(mod(-1, spec.modulus));
      if (!(minus == gens.front())) gens.push_back(minus);
      break;
    }
    case Family::PlainZ:
      gens = {GroupElement::line(1), GroupElement::line(-1)};
      break;
    case Family::FreeProduct: {
      for (const auto& g : generator_set(*spec.left))
        gens.push_back(GroupElement(
            GroupElement::AltWord{{{0, std::make_shared<GroupElement>(g)}}}));
      for (const auto& g : generator_set(*spec.right))
        gens.push_back(GroupElement(
            GroupElement::AltWord{{{1, std::make_shared<GroupElement>(g)}}}));
      break;
    }
  }
  return gens;
}

std::int64_t dihedral_line_coordinate(const GroupElement& g) {
  const auto& d = g.as_dihedral();
  return d.eps == 0 ? -2 * d.t : 2 * d.t + 1;
}

GroupElement dihedral_from_line(std::int64_t iota) {
  if (mod(iota, 2) == 0) return GroupElement::dihedral(-iota / 2, 0);
  // floor((iota-1)/2) also for negatives: iota odd, iota-1 even
  return GroupElement::dihedral((iota - 1) / 2, 1);
}

std::int64_t word_length(const GroupElement& g, const MarkedGroupSpec& spec) {
  switch (spec.family) {
    case Family::CyclicZ: {
      std::int64_t p = mod(g.as_line().pos, spec.modulus);
      return std::min(p, spec.modulus - p);
    }
    case Family::PlainZ: {
      std::int64_t p = g.as_line().pos;
      return p >= 0 ? p : -p;
    }
    case Family::DeltaPrimeK: {
      std::int64_t io = dihedral_line_coordinate(g);
      return io >= 0 ? io : -io;
    }
    case Family::FreeProduct: {
      std::int64_t total = 0;
      for (const auto& l : g.as_alt_word().letters)
        total += word_length(*l.elem, l.side == 0 ? *spec.left : *spec.right);
      return total;
    }
    default:
      throw std::domain_error("word_length unsupported for family " + spec.name());
  }
}

bool generators_valid(const MarkedGroupSpec& spec) {
  std::vector<GroupElement> gens = generator_set(spec);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (is_identity(gens[i])) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] == gens[j]) return false;
    GroupElement inv = inverse(gens[i], spec);
    if (std::find(gens.begin(), gens.end(), inv) == gens.end()) return false;
  }
  std::size_t expected = gens.size();
  switch (spec.family) {
    case Family::GammaSec2:
    case Family::DeltaSec2: expected = 4; break;
    case Family::GammaK:
    case Family::DeltaK: expected = static_cast<std::size_t>(3 * spec.k - 5); break;
    case Family::GammaPrimeK:
    case Family::DeltaPrimeK: expected = static_cast<std::size_t>(4 * spec.k - 8); break;
    case Family::ZxZ:
    case Family::ZsemiZ: expected = 6; break;
    default: break;
  }
  return gens.size() == expected;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::uint64_t hash_element(const GroupElement& g) {
  std::uint64_t h = static_cast<std::uint64_t>(g.rep.index()) * 0x2545f4914f6cdd1dULL;
  if (g.is_fiber()) {
    h = mix(h, static_cast<std::uint64_t>(g.as_fiber().i));
    h = mix(h, static_cast<std::uint64_t>(g.as_fiber().n));
  } else if (g.is_line()) {
    h = mix(h, static_cast<std::uint64_t>(g.as_line().pos));
  } else if (g.is_dihedral()) {
    h = mix(h, static_cast<std::uint64_t>(g.as_dihedral().t));
    h = mix(h, static_cast<std::uint64_t>(g.as_dihedral().eps));
  } else if (g.is_pair()) {
    h = mix(h, static_cast<std::uint64_t>(g.as_pair().a));
    h = mix(h, static_cast<std::uint64_t>(g.as_pair().b));
  } else {
    for (const auto& l : g.as_alt_word().letters) {
      h = mix(h, static_cast<std::uint64_t>(l.side));
      h = mix(h, hash_element(*l.elem));
    }
  }
  return h;
}

}  // namespace caygraph
