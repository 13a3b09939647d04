#include "fixsub/iso_type.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "fixsub/errors.hpp"

namespace fixsub {

IsoType IsoType::normalize(IsoBase base, std::size_t param, std::size_t s) {
  IsoType a;
  a.s_ = s;
  switch (base) {
    case IsoBase::trivial:
      break;
    case IsoBase::free_infinite:
      a.base_ = base;
      break;
    case IsoBase::free:
      if (param >= 2) {
        a.base_ = base;
        a.param_ = param;
      } else {
        a.s_ += param;
      }
      break;
    case IsoBase::surface:
      // pi_1 of the torus is Z^2, of the sphere trivial.
      if (param >= 2) {
        a.base_ = base;
        a.param_ = param;
      } else {
        a.s_ += 2 * param;
      }
      break;
  }
  return a;
}

Rank rank_of(const IsoType& a) {
  switch (a.base()) {
    case IsoBase::trivial:
      return {false, a.abelian_rank()};
    case IsoBase::free:
      return {false, a.param() + a.abelian_rank()};
    case IsoBase::surface:
      return {false, 2 * a.param() + a.abelian_rank()};
    case IsoBase::free_infinite:
      return {true, 0};
  }
  return {};
}

std::string to_string(const Rank& r) { return r.infinite ? "aleph0" : std::to_string(r.value); }

std::string to_string(const IsoType& a) {
  std::string head;
  switch (a.base()) {
    case IsoBase::trivial:
      break;
    case IsoBase::free:
      head = "F_" + std::to_string(a.param());
      break;
    case IsoBase::free_infinite:
      head = "Finf";
      break;
    case IsoBase::surface:
      head = "S_" + std::to_string(a.param());
      break;
  }
  std::string tail;
  if (a.abelian_rank() == 1)
    tail = "Z";
  else if (a.abelian_rank() > 1)
    tail = "Z^" + std::to_string(a.abelian_rank());
  if (head.empty()) return tail.empty() ? "1" : tail;
  return tail.empty() ? head : head + " x " + tail;
}

IsoType parse_iso(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static const std::regex whole(R"(^\s*(1|f_(\d+)|finf|s_(\d+)|z(?:\^(\d+))?)\s*(?:x\s*z(?:\^(\d+))?\s*)?$)");
  std::smatch m;
  if (!std::regex_match(t, m, whole)) throw ParseError("cannot parse subgroup type \"" + std::string(text) + "\"");
  auto num = [&](int i) { return static_cast<std::size_t>(std::stoul(m[i].str())); };
  std::size_t s = 0;
  if (m[5].matched)
    s = num(5);
  else if (t.find('x') != std::string::npos)
    s = 1;
  const std::string head = m[1].str();
  if (head[0] == 'z') {
    if (t.find('x') != std::string::npos) throw ParseError("\"" + std::string(text) + "\": Z x Z^s is written Z^(s+1)");
    return IsoType::trivial(m[4].matched ? num(4) : 1);
  }
  if (head == "1") return IsoType::trivial(s);
  if (head == "finf") return IsoType::free_infinite(s);
  if (head[0] == 'f') return IsoType::free(num(2), s);
  return IsoType::surface(num(3), s);
}

}  // namespace fixsub
