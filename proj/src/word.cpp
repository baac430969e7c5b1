#include <cctype>

#include "hgm/mat3.hpp"

namespace hgm {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : t_(text) {}

  GroupWord run() {
    GroupWord w = word();
    skip();
    if (i_ != t_.size()) fail("unexpected '" + std::string(1, t_[i_]) + "'");
    return w;
  }

 private:
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < t_.size() && t_[i_] == c;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(i_) + " in '" + t_ + "'");
  }

  GroupWord word() {
    GroupWord w;
    while (true) {
      skip();
      if (i_ == t_.size() || t_[i_] == ')') return w;
      w = w * factor();
    }
  }

  GroupWord factor() {
    GroupWord a = atom();
    if (peek('^')) {
      ++i_;
      a = a.pow(exponent());
    }
    return a;
  }

  GroupWord atom() {
    skip();
    char c = t_[i_];
    if (c == '(') {
      ++i_;
      GroupWord w = word();
      if (!peek(')')) fail("missing ')'");
      ++i_;
      return w;
    }
    if (c == '1') {
      ++i_;
      return {};
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a letter");
    std::size_t start = i_;
    while (i_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[i_])) || t_[i_] == '_' || t_[i_] == '\''))
      ++i_;
    return GroupWord::letter(t_.substr(start, i_ - start));
  }

  int exponent() {
    bool braced = peek('{');
    if (braced) ++i_;
    skip();
    int sign = 1;
    if (i_ < t_.size() && t_[i_] == '-') {
      sign = -1;
      ++i_;
    }
    std::size_t start = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    if (start == i_) fail("expected an exponent");
    int value = std::stoi(t_.substr(start, i_ - start));
    if (braced) {
      if (!peek('}')) fail("missing '}'");
      ++i_;
    }
    return sign * value;
  }

  const std::string& t_;
  std::size_t i_ = 0;
};

}  // namespace

GroupWord::GroupWord(std::vector<Syllable> syllables) : s_(std::move(syllables)) { reduce(); }

GroupWord GroupWord::parse(const std::string& text) { return Parser(text).run(); }

GroupWord GroupWord::letter(const std::string& name, int exponent) { return GroupWord({{name, exponent}}); }

void GroupWord::reduce() {
  std::vector<Syllable> out;
  for (const Syllable& s : s_) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().letter == s.letter) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  s_ = std::move(out);
}

GroupWord GroupWord::inverse() const {
  std::vector<Syllable> out(s_.rbegin(), s_.rend());
  for (Syllable& s : out) s.exponent = -s.exponent;
  return GroupWord(std::move(out));
}

GroupWord GroupWord::pow(int k) const {
  GroupWord base = k < 0 ? inverse() : *this;
  GroupWord out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

std::string GroupWord::str() const {
  if (s_.empty()) return "1";
  std::string out;
  for (const Syllable& s : s_) {
    if (!out.empty()) out += ' ';
    out += s.letter;
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<Syllable> s = a.s_;
  s.insert(s.end(), b.s_.begin(), b.s_.end());
  return GroupWord(std::move(s));
}

std::pair<GroupWord, GroupWord> braid_sides(const GroupWord& x, const GroupWord& y, int n) {
  GroupWord left, right;
  for (int i = 0; i < n; ++i) {
    left = left * (i % 2 == 0 ? x : y);
    right = right * (i % 2 == 0 ? y : x);
  }
  return {left, right};
}

GroupWord braid_relator(const GroupWord& x, const GroupWord& y, int n) {
  auto [l, r] = braid_sides(x, y, n);
  return l * r.inverse();
}

CMat3 evaluate_word(const GroupWord& w, const Assignment& assignment, const Tolerance& tol) {
  CMat3 out = CMat3::identity();
  for (const Syllable& s : w.syllables()) {
    auto it = assignment.find(s.letter);
    if (it == assignment.end()) throw Error(ErrorCode::UnknownLetter, "no matrix assigned to '" + s.letter + "'");
    out = out * power(it->second, s.exponent, tol);
  }
  return out;
}

}  // namespace hgm
