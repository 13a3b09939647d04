#include "fixsub/json_io.hpp"

#include <limits>

#include "fixsub/errors.hpp"

namespace fixsub {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return f.get<std::string>();
}

std::vector<Word> words_from_json(const Json& j, const Ambient& a) {
  if (!j.is_array()) throw ParseError("expected an array of words");
  std::vector<Word> out;
  for (const auto& w : j) {
    if (!w.is_string()) throw ParseError("words must be strings");
    out.push_back(word_from_text(w.get<std::string>(), a));
  }
  return out;
}

Json words_to_json(const std::vector<Word>& words, const Ambient& a) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(word_to_text(w, a));
  return out;
}

Json alpha_to_json(const AlphaSpec& spec, const Ambient& a) {
  Json j{{"images", words_to_json(spec.images, a)}, {"certified_complete", spec.certified_complete}};
  if (!spec.fix)
    j["fix"] = nullptr;
  else if (spec.fix->whole_group)
    j["fix"] = "whole";
  else
    j["fix"] = words_to_json(spec.fix->basis, a);
  return j;
}

AlphaSpec alpha_from_json(const Json& j, const Ambient& a) {
  AlphaSpec spec;
  spec.images = words_from_json(field(j, "images"), a);
  if (j.contains("fix") && !j.at("fix").is_null()) {
    const Json& f = j.at("fix");
    if (f.is_string()) {
      if (f.get<std::string>() != "whole") throw ParseError("fix must be \"whole\", a word list or null");
      spec.fix = FixCertificate::whole();
    } else {
      spec.fix = FixCertificate::free_basis(words_from_json(f, a));
    }
  }
  if (j.contains("certified_complete")) spec.certified_complete = j.at("certified_complete").get<bool>();
  return spec;
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string \"" + j.get<std::string>() + "\"");
    return x;
  }
  throw ParseError("expected an integer");
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  IntVector out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = field(j, "rows").get<std::size_t>(), cols = field(j, "cols").get<std::size_t>();
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) throw ParseError("matrix entries do not match rows");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    IntVector row = vector_from_json(entries[r]);
    if (row.size() != cols) throw ParseError("matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

std::string word_to_text(const Word& u, const Ambient& a) { return u.empty() ? "1" : to_string(u, a.alphabet()); }

Word word_from_text(const std::string& text, const Ambient& a) {
  if (text == "1") return Word(a.word_rank());
  return parse_word(text, a.word_rank(), a.alphabet());
}

Json endo_to_json(const StdEndo& e, const std::optional<StdEndo>& inverse) {
  Json j{{"ambient", to_string(e.ambient)},
         {"alpha", alpha_to_json(e.alpha, e.ambient)},
         {"gamma", matrix_to_json(e.gamma)},
         {"L", matrix_to_json(e.L)},
         {"claims_automorphism", e.claims_automorphism}};
  if (e.expected_iso) j["expected"] = to_string(*e.expected_iso);
  if (inverse)
    j["inverse"] = {{"alpha", alpha_to_json(inverse->alpha, e.ambient)},
                    {"gamma", matrix_to_json(inverse->gamma)},
                    {"L", matrix_to_json(inverse->L)}};
  return j;
}

EndoDocument endo_from_json(const Json& j) {
  try {
    EndoDocument doc;
    StdEndo& e = doc.endo;
    e.ambient = parse_ambient(text_field(j, "ambient"));
    e.alpha = alpha_from_json(field(j, "alpha"), e.ambient);
    e.gamma = matrix_from_json(field(j, "gamma"));
    e.L = matrix_from_json(field(j, "L"));
    if (j.contains("claims_automorphism")) e.claims_automorphism = j.at("claims_automorphism").get<bool>();
    if (j.contains("expected")) e.expected_iso = parse_iso(text_field(j, "expected"));
    if (j.contains("inverse")) {
      const Json& inv = j.at("inverse");
      StdEndo f;
      f.ambient = e.ambient;
      f.alpha = alpha_from_json(field(inv, "alpha"), e.ambient);
      if (!f.alpha.fix) f.alpha.fix = e.alpha.fix;
      f.gamma = matrix_from_json(field(inv, "gamma"));
      f.L = matrix_from_json(field(inv, "L"));
      f.claims_automorphism = true;
      doc.inverse = std::move(f);
    }
    return doc;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed endomorphism document: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("malformed endomorphism document: ") + ex.what());
  }
}

Json fix_to_json(const Ambient& a, const FixDescription& d) {
  Rank r = rank_of(d.projected.iso);
  Json projected{{"tag", to_string(d.projected.tag)},
                 {"index", d.projected.index},
                 {"rank", r.infinite ? Json("aleph0") : Json(r.value)},
                 {"iso", to_string(d.projected.iso)}};
  Json witnesses = Json::array();
  for (const auto& w : d.witnesses) witnesses.push_back(Json::array({word_to_text(w.u, a), vector_to_json(w.v)}));
  Rank total = rank_of(d.iso);
  return {{"s", d.s},
          {"projected", projected},
          {"iso", to_string(d.iso)},
          {"rank", total.infinite ? Json("aleph0") : Json(total.value)},
          {"witnesses", witnesses},
          {"notes", d.notes}};
}

Json recipe_to_json(const Recipe& r) {
  return {{"recipe", r.id},
          {"params", r.params},
          {"expected", to_string(r.expected)},
          {"notes", r.notes},
          {"endo", endo_to_json(r.endo, r.inverse)}};
}

}  // namespace fixsub
