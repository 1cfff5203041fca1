#include "zel/json_io.hpp"

#include "zel/error.hpp"

namespace zel {

json to_json(HalfExp h) { return h.to_string(); }

json to_json(const Segment& s) {
  return {{"line", s.line().name()}, {"b", to_json(s.begin())}, {"e", to_json(s.end())}};
}

json to_json(const Multisegment& a) {
  json segs = json::array();
  for (const auto& s : a) segs.push_back({{"b", to_json(s.begin())}, {"e", to_json(s.end())}});
  return {{"line", a.line().name()}, {"segments", std::move(segs)}};
}

json to_json(const RingElement& e) {
  json terms = json::array();
  for (const auto& [ms, coef] : e.terms()) terms.push_back({{"coef", coef}, {"ms", to_json(ms)}});
  return {{"basis", std::string(to_string(e.basis()))}, {"terms", std::move(terms)}};
}

json to_json(const SpehPairParams& p) {
  json lower = json::array();
  json upper = json::array();
  for (const auto& s : p.lower) lower.push_back(to_json(s));
  for (const auto& s : p.upper) upper.push_back(to_json(s));
  return {{"n", p.n}, {"d", p.d}, {"k", p.k}, {"line", p.line.name()}, {"lower", lower}, {"upper", upper}};
}

namespace {

json factors_json(const std::vector<Factor>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back({{"j", f.index}, {"ms", to_json(f.ms)}});
  return out;
}

}  // namespace

json to_json(const CompositionReport& r) {
  return {{"n", r.params.n},
          {"d", r.params.d},
          {"k", r.params.k},
          {"line", r.params.line.name()},
          {"sign", std::string(to_string(r.sign))},
          {"basis", std::string(to_string(r.basis))},
          {"length", r.length()},
          {"factors", factors_json(r.factors)},
          {"socle", to_json(r.socle)},
          {"cosocle", to_json(r.cosocle)},
          {"lattice", r.lattice}};
}

json to_json(const std::vector<LatticeLevel>& chain) {
  json out = json::array();
  for (const auto& level : chain) {
    json members = json::array();
    for (const auto& m : level.members) members.push_back(to_json(m));
    out.push_back({{"indices", level.indices}, {"members", std::move(members)}});
  }
  return out;
}

json to_json(const DualTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json chain = json::array();
    for (const auto& c : s.chain) chain.push_back(to_json(c));
    steps.push_back({{"emitted", to_json(s.emitted)}, {"chain", chain}, {"remaining", to_json(s.remaining)}});
  }
  return {{"steps", std::move(steps)}};
}

json to_json(const OracleResult& r) {
  json factors = json::array();
  json certs = json::array();
  for (const auto& f : r.factors) factors.push_back(to_json(f));
  for (const auto& c : r.certificates) {
    json cert = {{"factor", to_json(c.factor)}, {"source", c.source}, {"filters", c.filters}};
    cert["matched"] = c.matched ? to_json(*c.matched) : json(nullptr);
    certs.push_back(std::move(cert));
  }
  return {{"n", r.n},       {"d", r.d}, {"k", r.k}, {"line", r.line.name()}, {"factors", factors},
          {"certificates", certs}};
}

json to_json(const ConjectureResult& r) {
  return {{"conjectural", r.conjectural}, {"index_set", r.index_set}, {"factors", factors_json(r.factors)}};
}

json to_json(const SweepReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    json cell = {{"n", c.n}, {"d", c.d}, {"k", c.k}, {"agree", c.agree}};
    if (!c.oracle_only.empty() || !c.theorem_only.empty()) {
      json oo = json::array();
      json to = json::array();
      for (const auto& m : c.oracle_only) oo.push_back(to_json(m));
      for (const auto& m : c.theorem_only) to.push_back(to_json(m));
      cell["oracle_only"] = std::move(oo);
      cell["theorem_only"] = std::move(to);
    }
    if (!c.error.empty()) cell["error"] = c.error;
    cells.push_back(std::move(cell));
  }
  return {{"all_agree", r.all_agree()}, {"disagreements", r.disagreements()}, {"cells", std::move(cells)}};
}

namespace {

// Runs a parser body, turning nlohmann's type/lookup errors into ParseError.
template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad ") + what + ": " + e.what());
  }
}

Line parse_line(const json& j) {
  if (!j.contains("line")) return Line{};
  return Line(j.at("line").get<std::string>());
}

}  // namespace

HalfExp parse_half_exp(const json& j) {
  return guarded("exponent", [&] {
    if (j.is_number_integer()) return HalfExp::integer(j.get<std::int64_t>());
    return HalfExp::parse(j.get<std::string>());
  });
}

Segment parse_segment(const json& j) {
  return guarded("segment", [&] {
    return Segment(parse_line(j), parse_half_exp(j.at("b")), parse_half_exp(j.at("e")));
  });
}

Multisegment parse_multisegment(const json& j) {
  return guarded("multisegment", [&] {
    const Line line = parse_line(j);
    std::vector<Segment> segs;
    for (const auto& s : j.at("segments")) {
      const Line own = s.contains("line") ? parse_line(s) : line;
      segs.emplace_back(own, parse_half_exp(s.at("b")), parse_half_exp(s.at("e")));
    }
    return Multisegment(line, std::move(segs));
  });
}

RingElement parse_ring_element(const json& j) {
  return guarded("ring element", [&] {
    const auto basis_name = j.at("basis").get<std::string>();
    if (basis_name != "Z" && basis_name != "zeta") {
      throw Error(Errc::ParseError, "basis must be \"Z\" or \"zeta\", got \"" + basis_name + "\"");
    }
    RingElement e(basis_name == "Z" ? Basis::Z : Basis::Zeta);
    for (const auto& t : j.at("terms")) e.add_term(parse_multisegment(t.at("ms")), t.at("coef").get<std::int64_t>());
    return e;
  });
}

SpehPairParams parse_params(const json& j) {
  return guarded("pair parameters", [&] {
    return make_params(j.at("n").get<int>(), j.at("d").get<int>(), j.at("k").get<int>(), parse_line(j));
  });
}

CompositionReport parse_report(const json& j) {
  return guarded("composition report", [&] {
    CompositionReport r;
    r.params = parse_params(j);
    const auto sign = j.at("sign").get<std::string>();
    const auto basis = j.at("basis").get<std::string>();
    if ((sign != "+" && sign != "-") || (basis != "Z" && basis != "L")) {
      throw Error(Errc::ParseError, "sign must be +/- and basis Z/L");
    }
    r.sign = sign == "+" ? Sign::Plus : Sign::Minus;
    r.basis = basis == "Z" ? Parametrization::Zelevinsky : Parametrization::Langlands;
    for (const auto& f : j.at("factors")) r.factors.push_back({f.at("j").get<int>(), parse_multisegment(f.at("ms"))});
    r.socle = parse_multisegment(j.at("socle"));
    r.cosocle = parse_multisegment(j.at("cosocle"));
    r.lattice = j.at("lattice").get<std::vector<std::vector<int>>>();
    if (j.contains("length") && j.at("length").get<std::size_t>() != r.factors.size()) {
      throw Error(Errc::ParseError, "length does not match the factor count");
    }
    return r;
  });
}

}  // namespace zel
