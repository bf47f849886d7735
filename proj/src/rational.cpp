#include "ellstab/rational.hpp"

#include "ellstab/errors.hpp"

namespace ellstab {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw usage_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_int(const Rat& q) {
  ensure(is_integer(q), "to_int on a non-integral rational");
  return q.get_num();
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string int_str(const Int& n) { return n.get_str(); }

namespace {

bool valid_decimal(std::string_view t) {
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char ch : t)
    if (ch < '0' || ch > '9') return false;
  return true;
}

} // namespace

std::optional<Int> parse_int(std::string_view text) {
  if (!valid_decimal(text)) return std::nullopt;
  if (text[0] == '+') text.remove_prefix(1); // mpz rejects a leading '+'
  return Int(std::string(text), 10);
}

std::optional<Rat> parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  Rat q(*num, *den);
  q.canonicalize();
  return q;
}

} // namespace ellstab
