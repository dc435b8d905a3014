#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sl3web/parse.hpp"
#include "sl3web/random_words.hpp"
#include "sl3web/skein.hpp"
#include "sl3web/tangle.hpp"

namespace sl3web::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "sl3web 0.1.0";

struct Options {
  std::string format = "text";  // "text" | "json"
  std::string cache_path;       // empty disables the cache
  std::size_t max_crossings = 20;
  std::uint64_t seed = 0;
  bool timings = false;
};

struct Outcome {
  int exit_code = 0;
  std::string document;  // the structured result, for stdout
  std::string human;     // diagnostics, for stderr
};

// --- serialization ----------------------------------------------------------

inline json poly_to_json(const LaurentPoly& p) {
  json m = json::object();
  for (const auto& [e, c] : p.terms()) m[std::to_string(e)] = c.str();
  return m;
}

inline std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b &  15]);
  }
  return out;
}

inline json combo_to_json(const WebCombo& c) {
  json terms = json::array();
  for (const auto& [key, t] : c.terms()) {
    json entry;
    entry["web"] = hex_encode(key);
    entry["coefficient"] = poly_to_json(t.coeff);
    terms.push_back(std::move(entry));
  }
  json out;
  out["source"] = c.source_sig().str();
  out["target"] = c.target_sig().str();
  out["terms"] = std::move(terms);
  return out;
}

inline void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) render_text(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

inline std::string render_document(const json& doc, const Options& opts) {
  if (opts.format == "json") return doc.dump(2) + "\n";
  std::ostringstream out;
  render_text(doc, "", out);
  return out.str();
}

// --- cache ------------------------------------------------------------------

class Cache {
 public:
  explicit Cache(const std::string& path) : path_(path) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    try {
      json file = json::parse(in);
      if (file.value("engine", "") == kEngineVersion) entries_ = file["entries"];
    } catch (...) {
      // unreadable or stale cache: start fresh
    }
    if (!entries_.is_object()) entries_ = json::object();
  }

  const json* lookup(const std::string& key) const {
    if (path_.empty()) return nullptr;
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &*it;
  }

  void store(const std::string& key, const json& result) {
    if (path_.empty()) return;
    entries_[key] = result;
    json file;
    file["engine"] = kEngineVersion;
    file["entries"] = entries_;
    std::ofstream out(path_);
    out << file.dump(2) << "\n";
  }

 private:
  std::string path_;
  json entries_ = json::object();
};

// --- commands ----------------------------------------------------------------

namespace detail {

inline std::string canonical_text(const Word& w) {
  return word_to_string(layered_to_word(canonical_layered(normalize(w))));
}

template <typename Fn>
Outcome guarded(const std::string& command, const std::string& input, const Options& opts,
                Fn&& body) {
  json doc;
  doc["command"] = command;
  doc["input"] = input;
  Outcome res;
  const auto started = std::chrono::steady_clock::now();
  try {
    json result = body(res);
    doc["result"] = std::move(result);
  } catch (const ParseError& e) {  // also UnknownGeneratorError
    res.exit_code = 1;
    res.human = command + ": error at position " + std::to_string(e.position) + ": " + e.what();
    return res;
  } catch (const TypeMismatchError& e) {
    res.exit_code = 1;
    res.human = command + ": type error: " + std::string(e.what());
    if (!e.offending_subword.empty()) res.human += "\n  in subword: " + e.offending_subword;
    if (e.span_end > e.span_begin)
      res.human += "\n  at bytes [" + std::to_string(e.span_begin) + ", " +
                   std::to_string(e.span_end) + ")";
    return res;
  } catch (const NotClosedError& e) {
    res.exit_code = 2;
    res.human = command + ": " + std::string(e.what());
    return res;
  } catch (const NotALinkError& e) {
    res.exit_code = 2;
    res.human = command + ": " + std::string(e.what());
    return res;
  } catch (const TooManyCrossingsError& e) {
    res.exit_code = 2;
    res.human = command + ": " + std::string(e.what());
    return res;
  } catch (const BoundaryMismatchError& e) {
    res.exit_code = 2;
    res.human = command + ": " + std::string(e.what());
    return res;
  } catch (const SignatureMismatchError& e) {
    res.exit_code = 2;
    res.human = command + ": " + std::string(e.what());
    return res;
  } catch (const Error& e) {
    res.exit_code = 2;
    res.human = command + ": " + std::string(e.what());
    return res;
  }
  if (opts.timings) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    doc["timings"] = {
        {"total_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
  }
  res.document = render_document(doc, opts);
  return res;
}

}  // namespace detail

inline Outcome run_bracket(const std::string& text, const Options& opts) {
  return detail::guarded("bracket", text, opts, [&](Outcome&) {
    Word w = parse_word(text, Alphabet::webs());
    auto [s, t] = word_type(w);
    if (!s.is_empty() || !t.is_empty())
      throw NotClosedError("word has boundary " + s.str() + " -> " + t.str() +
                           "; the bracket needs a closed web");
    const std::string key = "bracket|" + detail::canonical_text(w);
    Cache cache(opts.cache_path);
    if (const json* hit = cache.lookup(key)) return *hit;
    LaurentPoly p = kuperberg_bracket(WebDiagram::from_layered(normalize(w)));
    json result;
    result["polynomial"] = poly_to_json(p);
    result["polynomial_text"] = p.str();
    cache.store(key, result);
    return result;
  });
}

inline Outcome run_tangle(const std::string& text, const Options& opts) {
  return detail::guarded("tangle", text, opts, [&](Outcome&) {
    Word w = parse_word(text, Alphabet::tangles());
    const std::string key = "tangle|" + detail::canonical_text(w);
    Cache cache(opts.cache_path);
    if (const json* hit = cache.lookup(key)) return *hit;
    WebCombo inv = sl3_invariant(w);
    json result;
    result["invariant"] = combo_to_json(inv);
    auto [s, t] = word_type(w);
    if (s.is_empty() && t.is_empty()) {
      LaurentPoly p = inv.is_zero() ? LaurentPoly::zero() : inv.terms().begin()->second.coeff;
      result["polynomial"] = poly_to_json(p);
      result["polynomial_text"] = p.str();
    }
    cache.store(key, result);
    return result;
  });
}

inline Outcome run_normalize(const std::string& text, const Options& opts) {
  return detail::guarded("normalize", text, opts, [&](Outcome&) {
    Word w = parse_word(text, Alphabet::merged());
    LayeredWord lw = canonical_layered(normalize(w));
    json result;
    result["source"] = lw.source.str();
    result["target"] = lw.target.str();
    result["layers"] = lw.layers.size();
    result["word"] = word_to_string(layered_to_word(lw));
    return result;
  });
}

inline Outcome run_check(const std::string& scope, const Options& opts) {
  return detail::guarded("check", scope, opts, [&](Outcome& res) {
    json result;
    bool all = true;
    json rel = json::array();
    auto record = [&](const char* suite, const RelationReport& report) {
      for (const auto& o : report.outcomes) {
        json r;
        r["suite"] = suite;
        r["name"] = o.name;
        r["passed"] = o.passed;
        rel.push_back(std::move(r));
        all = all && o.passed;
      }
    };
    if (scope == "webs" || scope == "all") record("web-presentation", web_presentation_suite());
    if (scope == "tangles" || scope == "all") record("reidemeister", reidemeister_suite());
    if (scope != "webs" && scope != "tangles" && scope != "all")
      throw Error("unknown check scope \"" + scope + "\" (expected webs, tangles or all)");

    // Seeded confluence spot check: random closed resolutions, several
    // randomized reduction orders each, one bracket.
    Rng rng(opts.seed);
    bool confluent = true;
    for (int i = 0; i < 10 && confluent; ++i) {
      LayeredWord link = randword::random_link(rng, 3, 4);
      const std::size_t n = crossing_layers_top_down(link).size();
      std::vector<bool> bits(n);
      for (std::size_t j = 0; j < n; ++j) bits[j] = rng() & 1;
      WebDiagram web = resolve_tangle(link, bits);
      LaurentPoly reference = kuperberg_bracket(web);
      for (int k = 0; k < 3; ++k) {
        WebCombo nf = normalize_combo(WebCombo::single(web), rng());
        LaurentPoly p = nf.is_zero() ? LaurentPoly::zero() : nf.terms().begin()->second.coeff;
        confluent = confluent && (p == reference);
      }
    }
    json conf;
    conf["suite"] = "confluence";
    conf["name"] = "randomized-reduction-order";
    conf["passed"] = confluent;
    rel.push_back(std::move(conf));
    all = all && confluent;

    result["relations"] = std::move(rel);
    result["all_passed"] = all;
    if (!all) res.exit_code = 3;
    return result;
  });
}

inline Outcome run_catalog(const Options& opts) {
  return detail::guarded("catalog", "", opts, [&](Outcome&) {
    json result;
    json names = json::array();
    for (const auto& [name, text] : catalog_sources()) {
      json e;
      e["name"] = name;
      e["word"] = text;
      names.push_back(std::move(e));
    }
    result["entries"] = std::move(names);
    return result;
  });
}

inline Outcome run_catalog_eval(const std::string& name, const Options& opts) {
  return detail::guarded("catalog-eval", name, opts, [&](Outcome&) {
    Word w = catalog_word(name);
    const std::string key = "catalog|" + detail::canonical_text(w);
    Cache cache(opts.cache_path);
    if (const json* hit = cache.lookup(key)) return *hit;
    LaurentPoly p = sl3_link_polynomial(w);
    json result;
    result["name"] = name;
    result["polynomial"] = poly_to_json(p);
    result["polynomial_text"] = p.str();
    cache.store(key, result);
    return result;
  });
}

}  // namespace sl3web::cli
