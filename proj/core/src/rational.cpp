#include "graphstab/rational.hpp"

#include <charconv>
#include <limits>

#include "graphstab/error.hpp"

namespace graphstab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::InvalidMatching: return "InvalidMatching";
    case Errc::NotHalfIntegral: return "NotHalfIntegral";
    case Errc::DegreeConstraintViolated: return "DegreeConstraintViolated";
    case Errc::NotBasic: return "NotBasic";
    case Errc::CycleNotInSupport: return "CycleNotInSupport";
    case Errc::VertexNotOnCycle: return "VertexNotOnCycle";
    case Errc::HalfValueOnPath: return "HalfValueOnPath";
    case Errc::NotAComponent: return "NotAComponent";
    case Errc::InfeasibleCover: return "InfeasibleCover";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::WeightLoss: return "WeightLoss";
    case Errc::NotAugmenting: return "NotAugmenting";
    case Errc::NotOptimalPair: return "NotOptimalPair";
    case Errc::PathNotAugmenting: return "PathNotAugmenting";
    case Errc::EndpointNotRecognized: return "EndpointNotRecognized";
    case Errc::EntryIsMinusInfinity: return "EntryIsMinusInfinity";
    case Errc::VertexNotExposed: return "VertexNotExposed";
    case Errc::MNotAMatching: return "MNotAMatching";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(Errc::ParseError, "malformed number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(text.substr(0, slash), whole);
    std::int64_t den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(whole) + "'");
    result = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(Errc::ParseError, "malformed number '" + std::string(whole) + "'");
    }
    // 18 fractional digits is the most an int64 denominator holds.
    if (frac_part.size() > 18) {
      throw Error(Errc::ParseError, "too many decimal places in '" + std::string(whole) + "'");
    }
    std::int64_t ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
    std::int64_t fp = frac_part.empty() ? 0 : parse_digits(frac_part, whole);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    if (ip > std::numeric_limits<std::int64_t>::max() / scale) {
      throw Error(Errc::ParseError, "number out of range '" + std::string(whole) + "'");
    }
    result = Rational(ip * scale + fp, scale);
  } else {
    result = Rational(parse_digits(text, whole));
  }
  return negative ? -result : result;
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace graphstab
