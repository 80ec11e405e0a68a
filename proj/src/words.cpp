#include "autf/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "autf/errors.hpp"

namespace autf {

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = parse_word_until(false);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Word parse_word_until(bool in_bracket) {
    Word w;
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c == ',' || c == ']') {
        if (!in_bracket) throw ParseError(std::string("unexpected '") + c + "'", pos_);
        break;
      }
      if (c == '[') {
        ++pos_;
        Word u = parse_word_until(true);
        skip_ws();
        expect(',');
        Word v = parse_word_until(true);
        skip_ws();
        expect(']');
        Word ui = inverse(u), vi = inverse(v);
        w.insert(w.end(), ui.begin(), ui.end());
        w.insert(w.end(), vi.begin(), vi.end());
        w.insert(w.end(), u.begin(), u.end());
        w.insert(w.end(), v.begin(), v.end());
        continue;
      }
      w.push_back(parse_letter());
    }
    return w;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  Letter parse_letter() {
    std::size_t start = pos_;
    Gen g;
    char c = text_[pos_];
    if (c == 't') {
      g = Gen::t;
      ++pos_;
    } else {
      if (pos_ + 1 >= text_.size()) throw ParseError("unknown generator", start);
      char d = text_[pos_ + 1];
      int idx = d == '0' ? 0 : d == '1' ? 1 : -1;
      if (idx < 0) throw ParseError("unknown generator", start);
      switch (c) {
        case 'x': g = idx ? Gen::x1 : Gen::x0; break;
        case 'y': g = idx ? Gen::y1 : Gen::y0; break;
        case 'z': g = idx ? Gen::z1 : Gen::z0; break;
        case 'w': g = idx ? Gen::w1 : Gen::w0; break;
        default: throw ParseError("unknown generator", start);
      }
      pos_ += 2;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("unknown generator", start);
    }
    int e = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      std::size_t nb = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      std::size_t db = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == db) throw ParseError("expected exponent", pos_);
      if (pos_ - db > 6) throw ParseError("exponent too large", db);
      e = std::atoi(std::string(text_.substr(nb, pos_ - nb)).c_str());
    }
    return {g, e};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view gen_name(Gen g) {
  switch (g) {
    case Gen::x0: return "x0";
    case Gen::x1: return "x1";
    case Gen::y0: return "y0";
    case Gen::y1: return "y1";
    case Gen::z0: return "z0";
    case Gen::z1: return "z1";
    case Gen::w0: return "w0";
    case Gen::w1: return "w1";
    case Gen::t: return "t";
  }
  return "?";
}

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string format_word(std::span<const Letter> w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += gen_name(l.gen);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

Word inverse(std::span<const Letter> w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exponent});
  return r;
}

Word simplify(std::span<const Letter> w) {
  Word r;
  for (const Letter& l : w) {
    if (l.exponent == 0) continue;
    if (!r.empty() && r.back().gen == l.gen) {
      r.back().exponent += l.exponent;
      if (r.back().exponent == 0) r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

std::int64_t word_length(std::span<const Letter> w) {
  std::int64_t n = 0;
  for (const Letter& l : w) n += std::abs(l.exponent);
  return n;
}

void check_alphabet(std::span<const Letter> w, std::span<const Gen> allowed,
                    std::string_view context) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::find(allowed.begin(), allowed.end(), w[i].gen) == allowed.end()) {
      throw ParseError("generator " + std::string(gen_name(w[i].gen)) + " not allowed in " +
                           std::string(context),
                       i);
    }
  }
}

}  // namespace autf
