#include "symq/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "symq/errors.hpp"

namespace symq {

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word free_cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  while (r.size() >= 2 && r.front().gen == r.back().gen &&
         r.front().sign == -r.back().sign) {
    r.erase(r.begin());
    r.pop_back();
    r = free_reduce(r);
  }
  return r;
}

int Presentation::find_generator(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(generators.size()); ++i)
    if (generators[i] == name) return i;
  return -1;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_gens = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (tokens[0].text == "gens:") {
      if (have_gens)
        throw ParseError(lineno, tokens[0].column, "duplicate gens: line");
      have_gens = true;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (!valid_name(tokens[t].text))
          throw ParseError(lineno, tokens[t].column,
                           "invalid generator name '" + tokens[t].text + "'");
        if (p.find_generator(tokens[t].text) >= 0)
          throw ParseError(lineno, tokens[t].column,
                           "duplicate generator '" + tokens[t].text + "'");
        p.generators.push_back(tokens[t].text);
      }
    } else if (tokens[0].text == "rel:") {
      if (!have_gens)
        throw ParseError(lineno, tokens[0].column,
                         "rel: before gens: line");
      Word w;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        std::string name = tokens[t].text;
        int sign = 1;
        const std::size_t caret = name.find('^');
        if (caret != std::string::npos) {
          const std::string suffix = name.substr(caret);
          if (suffix != "^-1")
            throw ParseError(lineno, tokens[t].column,
                             "only ^-1 exponents are supported, got '" +
                                 suffix + "'");
          name = name.substr(0, caret);
          sign = -1;
        }
        if (!valid_name(name))
          throw ParseError(lineno, tokens[t].column,
                           "invalid token '" + tokens[t].text + "'");
        const int g = p.find_generator(name);
        if (g < 0)
          throw UnknownGeneratorError(lineno, tokens[t].column, name);
        w.emplace_back(g, sign);
      }
      p.relators.push_back(std::move(w));
    } else {
      throw ParseError(lineno, tokens[0].column,
                       "expected 'gens:' or 'rel:', got '" + tokens[0].text +
                           "'");
    }
  }
  if (!have_gens) throw ParseError(lineno + 1, 1, "missing gens: line");
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (const auto& r : p.relators) {
    out << "rel:";
    for (const Letter& l : r) {
      out << ' ' << p.generators[l.gen];
      if (l.sign < 0) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

namespace {

/// Does the word read literally w⁻¹·x·w·y^e for some split, with x a
/// positive generator and the last letter's sign equal to e?
bool matches_shape(const Word& u, bool allow_negative_tail) {
  const int len = static_cast<int>(u.size());
  if (len < 2 || len % 2 != 0) return false;
  const int k = (len - 2) / 2;
  if (u[k].sign != 1) return false;  // x must be a positive generator
  // wirtinger requires the tail to be y⁻¹; twisted also accepts y itself
  if (!allow_negative_tail && u[len - 1].sign != -1) return false;
  for (int i = 0; i < k; ++i)
    if (!(u[k + 1 + i] == u[k - 1 - i].inverse())) return false;
  return true;
}

RelatorShape shape_of(const Word& reduced) {
  if (reduced.empty()) return RelatorShape::Neither;
  const int len = static_cast<int>(reduced.size());
  for (int orientation = 0; orientation < 2; ++orientation) {
    const Word base = orientation ? inverse_word(reduced) : reduced;
    for (int r = 0; r < len; ++r) {
      Word rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (matches_shape(rot, /*allow_negative_tail=*/false))
        return RelatorShape::Wirtinger;
    }
  }
  for (int orientation = 0; orientation < 2; ++orientation) {
    const Word base = orientation ? inverse_word(reduced) : reduced;
    for (int r = 0; r < len; ++r) {
      Word rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (matches_shape(rot, /*allow_negative_tail=*/true))
        return RelatorShape::Twisted;
    }
  }
  return RelatorShape::Neither;
}

}  // namespace

WirtingerClassification classify_wirtinger(const Presentation& p) {
  WirtingerClassification out;
  bool all_wirtinger = true;
  bool all_twisted_or_wirtinger = true;
  for (const Word& r : p.relators) {
    const Word reduced = free_cyclic_reduce(r);
    out.empty_after_reduction.push_back(reduced.empty());
    if (reduced.empty()) {
      out.relator_tags.push_back(RelatorShape::Neither);
      continue;  // dropped by reduction, does not affect the verdict
    }
    const RelatorShape s = shape_of(reduced);
    out.relator_tags.push_back(s);
    if (s != RelatorShape::Wirtinger) all_wirtinger = false;
    if (s == RelatorShape::Neither) all_twisted_or_wirtinger = false;
  }
  out.overall = all_wirtinger            ? PresentationClass::Wirtinger
                : all_twisted_or_wirtinger ? PresentationClass::TwistedWirtinger
                                           : PresentationClass::General;
  return out;
}

const char* to_string(RelatorShape s) {
  switch (s) {
    case RelatorShape::Wirtinger: return "wirtinger";
    case RelatorShape::Twisted: return "twisted";
    case RelatorShape::Neither: return "neither";
  }
  return "?";
}

const char* to_string(PresentationClass c) {
  switch (c) {
    case PresentationClass::Wirtinger: return "Wirtinger";
    case PresentationClass::TwistedWirtinger: return "TwistedWirtinger";
    case PresentationClass::General: return "General";
  }
  return "?";
}

}  // namespace symq
