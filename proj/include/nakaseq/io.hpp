#ifndef NAKASEQ_IO_HPP
#define NAKASEQ_IO_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nakaseq/algebra.hpp"
#include "nakaseq/enumerate.hpp"
#include "nakaseq/excseq.hpp"

namespace nakaseq {

/// Module literal `top,len`, 1-based.
inline Indec parse_module_literal(std::string_view text) {
  const auto parts = detail::split(detail::trim(text), ',');
  if (parts.size() != 2) {
    throw SyntaxError("module literal must be 'top,len', got '" +
                      std::string(text) + "'");
  }
  return {detail::parse_int(parts[0], "top"), detail::parse_int(parts[1], "len")};
}

inline std::string module_literal(const Indec& m) {
  return std::to_string(m.top) + "," + std::to_string(m.length);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline nlohmann::ordered_json module_json(const Indec& m) {
  return {{"top", m.top}, {"len", m.length}};
}

/// Enumeration result as JSON. Counts are decimal strings.
inline nlohmann::ordered_json enumeration_json(const NakayamaAlgebra& a,
                                               Mode mode, bool full,
                                               const EnumResult& r,
                                               bool with_sequences) {
  nlohmann::ordered_json j;
  j["algebra"] = render_algebra_spec(a);
  j["mode"] = std::string(to_string(mode));
  j["full"] = full;
  j["maxSize"] = r.max_size;
  j["size"] = r.size;
  j["count"] = to_decimal(r.count);
  if (with_sequences) {
    auto seqs = nlohmann::ordered_json::array();
    for (const auto& s : r.sequences) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& m : s) row.push_back(module_json(m));
      seqs.push_back(std::move(row));
    }
    j["truncated"] = r.truncated;
    j["sequences"] = std::move(seqs);
  }
  return j;
}

struct LoadedEnumeration {
  NakayamaAlgebra algebra;
  Mode mode;
  EnumResult result;
};

/// Parses enumeration JSON and re-validates every sequence against the
/// algebra it names. Throws Error on malformed input or an invalid sequence.
inline LoadedEnumeration load_enumeration_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  try {
    auto algebra = parse_algebra_spec(j.at("algebra").get<std::string>());
    const auto mode = parse_mode(j.at("mode").get<std::string>());
    if (!mode) throw Error("unknown mode");
    EnumResult r;
    r.max_size = j.at("maxSize").get<int>();
    r.size = j.at("size").get<int>();
    r.count = BigInt(j.at("count").get<std::string>());
    if (j.contains("sequences")) {
      r.truncated = j.value("truncated", false);
      for (const auto& row : j.at("sequences")) {
        Sequence s;
        for (const auto& m : row) {
          s.push_back({m.at("top").get<int>(), m.at("len").get<int>()});
        }
        if (static_cast<int>(s.size()) != r.size) {
          throw Error("sequence length does not match size");
        }
        const auto check = validate_sequence(algebra, *mode, s);
        if (!check.valid) {
          throw Error("sequence fails validation: " + check.violation->reason);
        }
        r.sequences.push_back(std::move(s));
      }
      if (!r.truncated && BigInt(r.sequences.size()) != r.count) {
        throw Error("sequence list does not match count");
      }
    }
    return {std::move(algebra), *mode, std::move(r)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed enumeration JSON: ") + e.what());
  }
}

/// RFC 4180 quoting for a CSV field.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string sequence_text(const Sequence& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
  return os.str();
}

}  // namespace nakaseq

#endif  // NAKASEQ_IO_HPP
