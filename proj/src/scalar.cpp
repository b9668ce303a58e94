#include "pdual/scalar.hpp"

#include <charconv>

namespace pdual {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::UnitFails: return "UnitFails";
    case ErrorKind::NotCentralIdempotent: return "NotCentralIdempotent";
    case ErrorKind::AxiomIFails: return "AxiomIFails";
    case ErrorKind::AxiomIIFails: return "AxiomIIFails";
    case ErrorKind::AxiomIIIFails: return "AxiomIIIFails";
    case ErrorKind::NotIsoOnIdeal: return "NotIsoOnIdeal";
    case ErrorKind::NotGlobal: return "NotGlobal";
    case ErrorKind::HopfAxiomFails: return "HopfAxiomFails";
    case ErrorKind::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case ErrorKind::Axiom1Fails: return "Axiom1Fails";
    case ErrorKind::Axiom2Fails: return "Axiom2Fails";
    case ErrorKind::Axiom3Fails: return "Axiom3Fails";
    case ErrorKind::InternalFailure: return "InternalFailure";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  // Residues stay below 2^32 so sums never overflow and trial division is cheap.
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw Error(ErrorKind::ParseError, "modulus " + std::to_string(p) + " is not a prime below 2^32");
  }
  return Field{p};
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(ErrorKind::ParseError, "bad prime in field spec '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw Error(ErrorKind::ParseError, "field must be 'q' or 'fp:<p>', got '" + std::string(text) + "'");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(characteristic);
}

Zp::Zp(std::int64_t value, std::uint64_t modulus) : value_(value), modulus_(modulus) {
  value_ = reduced(modulus);
}

std::int64_t Zp::reduced(std::uint64_t p) const {
  if (p == 0) return value_;
  auto m = static_cast<std::int64_t>(p);
  auto r = value_ % m;
  return r < 0 ? r + m : r;
}

std::uint64_t Zp::join(const Zp& a, const Zp& b) {
  if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_) {
    throw Error(ErrorKind::FieldMismatch, "residues modulo " + std::to_string(a.modulus_) + " and " +
                                              std::to_string(b.modulus_));
  }
  return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
}

Zp Zp::inverse() const {
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw Error(ErrorKind::FieldMismatch, "cannot invert a residue with no modulus");
  }
  if (value_ == 0) throw Error(ErrorKind::InternalFailure, "division by zero residue");
  // Fermat: a^(p-2)
  std::uint64_t base = static_cast<std::uint64_t>(value_);
  std::uint64_t exp = modulus_ - 2;
  std::uint64_t acc = 1;
  while (exp != 0) {
    if (exp & 1U) acc = mul_mod(acc, base, modulus_);
    base = mul_mod(base, base, modulus_);
    exp >>= 1U;
  }
  Zp out;
  out.value_ = static_cast<std::int64_t>(acc);
  out.modulus_ = modulus_;
  return out;
}

Zp Zp::operator-() const {
  Zp out = *this;
  if (modulus_ == 0) {
    out.value_ = -value_;
  } else if (value_ != 0) {
    out.value_ = static_cast<std::int64_t>(modulus_) - value_;
  }
  return out;
}

Zp& Zp::operator+=(const Zp& other) {
  auto p = join(*this, other);
  if (p == 0) {
    value_ += other.value_;
    return *this;
  }
  auto sum = reduced(p) + other.reduced(p);
  auto m = static_cast<std::int64_t>(p);
  value_ = sum >= m ? sum - m : sum;
  modulus_ = p;
  return *this;
}

Zp& Zp::operator-=(const Zp& other) { return *this += -other; }

Zp& Zp::operator*=(const Zp& other) {
  auto p = join(*this, other);
  if (p == 0) {
    value_ *= other.value_;
    return *this;
  }
  value_ = static_cast<std::int64_t>(
      mul_mod(static_cast<std::uint64_t>(reduced(p)), static_cast<std::uint64_t>(other.reduced(p)), p));
  modulus_ = p;
  return *this;
}

bool operator==(const Zp& a, const Zp& b) {
  auto p = Zp::join(a, b);
  return a.reduced(p) == b.reduced(p);
}

std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.value(); }

Rational parse_rational(std::string_view text) {
  std::string ascii;
  ascii.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      ascii.push_back('-');
      i += 2;
    } else if (text[i] != ' ') {
      ascii.push_back(text[i]);
    }
  }
  auto valid = !ascii.empty();
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < ascii.size() && valid; ++i) {
    char c = ascii[i];
    if (c == '/') {
      ++slashes;
      valid = i > 0 && i + 1 < ascii.size();
    } else if (c == '-') {
      valid = i == 0 || ascii[i - 1] == '/';
    } else {
      valid = c >= '0' && c <= '9';
    }
  }
  if (!valid || slashes > 1) {
    throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
  }
  auto slash = ascii.find('/');
  Rational num(boost::multiprecision::mpz_int(ascii.substr(0, slash)));
  if (slash == std::string::npos) return num;
  boost::multiprecision::mpz_int den(ascii.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return num / Rational(den);
}

Zp ScalarTraits<Zp>::from_rational(const Field& f, const Rational& r) {
  if (f.is_rational()) throw Error(ErrorKind::FieldMismatch, "prime-field scalar requested over Q");
  auto p = boost::multiprecision::mpz_int(f.characteristic);
  boost::multiprecision::mpz_int num = boost::multiprecision::numerator(r) % p;
  boost::multiprecision::mpz_int den = boost::multiprecision::denominator(r) % p;
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "denominator of " + r.str() + " vanishes in " + f.name());
  }
  Zp n(num.convert_to<std::int64_t>(), f.characteristic);
  Zp d(den.convert_to<std::int64_t>(), f.characteristic);
  return n / d;
}

}  // namespace pdual
