#include "recurring/report.hpp"

#include <iomanip>
#include <sstream>

#include "recurring/semilocal.hpp"

namespace recurring {

using nlohmann::json;

CoreFacts CoreFacts::of(const CorePoly& core) { return {recurring::discriminant(core), recurring::exact_period(core)}; }

PrimeReport analyze_prime(const CorePoly& core, Prime p, const CoreFacts& facts, ConsistencyOptions opts) {
  const RpContextPtr ctx = make_context(core, p);
  const PeriodResult period = period_consistent(core, p, opts);

  PrimeReport r;
  r.t = core.t();
  r.p = p.value();
  r.period = period.period;
  r.preperiod = period.preperiod;
  r.classification = splitting_name(ctx->classification().kind);
  for (const auto& [f, e] : ctx->factorization().factors) r.factors.push_back({f.to_string(), e});
  r.discriminant = facts.discriminant;
  r.p_divides_discriminant = reduce(facts.discriminant, p) == 0;
  r.p_divides_period = mpz_divisible_ui_p(period.period.get_mpz_t(), p.value()) != 0;
  r.singular_companion = !ctx->companion_invertible();
  if (!r.singular_companion) {
    const Thm67Record thm = theorem_6_7_check(core, p);
    if (thm.period != period.period)
      throw Error(Errc::kInternalInconsistency, "period used by the ramification check differs");
    r.thm67_agree = thm.agree;
    r.unit_group_order = unit_group_order(*ctx);
  }
  r.idempotent_ranks = primitive_idempotents(*ctx).ranks();
  r.exact_period = facts.exact_period;
  return r;
}

namespace {

json big_to_json_number_or_string(const BigInt& v) {
  if (v >= 0 && v.fits_ulong_p()) return static_cast<std::uint64_t>(v.get_ui());
  return v.get_str();
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(static_cast<unsigned long>(j.get<std::uint64_t>()));
  return BigInt(static_cast<long>(j.get<std::int64_t>()));
}

std::string join_t(const std::vector<BigInt>& t, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += sep;
    s += t[i].get_str();
  }
  return s;
}

std::string factors_text(const std::vector<FactorText>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "; ";
    s += "(" + fs[i].factor + ")";
    if (fs[i].multiplicity > 1) s += "^" + std::to_string(fs[i].multiplicity);
  }
  return s;
}

std::string ranks_text(const std::vector<std::size_t>& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(r[i]);
  }
  return s;
}

std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

json to_json(const PrimeReport& r) {
  json j;
  json t = json::array();
  for (const auto& x : r.t) t.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
  j["t"] = std::move(t);
  j["p"] = r.p;
  j["period"] = big_to_json_number_or_string(r.period);
  j["preperiod"] = r.preperiod;
  j["classification"] = r.classification;
  json fs = json::array();
  for (const auto& f : r.factors) fs.push_back({{"factor", f.factor}, {"multiplicity", f.multiplicity}});
  j["factors"] = std::move(fs);
  j["discriminant"] = r.discriminant.get_str();
  j["p_divides_discriminant"] = r.p_divides_discriminant;
  j["p_divides_period"] = r.p_divides_period;
  j["thm67_agree"] = r.thm67_agree ? json(*r.thm67_agree) : json(nullptr);
  j["unit_group_order"] = r.unit_group_order ? json(r.unit_group_order->get_str()) : json(nullptr);
  j["idempotent_ranks"] = r.idempotent_ranks;
  j["exact_period"] = r.exact_period ? json(*r.exact_period) : json(nullptr);
  j["singular_companion"] = r.singular_companion;
  return j;
}

PrimeReport report_from_json(const json& j) {
  PrimeReport r;
  for (const auto& x : j.at("t")) r.t.push_back(big_from_json(x));
  r.p = j.at("p").get<std::uint32_t>();
  r.period = big_from_json(j.at("period"));
  r.preperiod = j.at("preperiod").get<std::uint64_t>();
  r.classification = j.at("classification").get<std::string>();
  for (const auto& f : j.at("factors"))
    r.factors.push_back({f.at("factor").get<std::string>(), f.at("multiplicity").get<unsigned>()});
  r.discriminant = BigInt(j.at("discriminant").get<std::string>());
  r.p_divides_discriminant = j.at("p_divides_discriminant").get<bool>();
  r.p_divides_period = j.at("p_divides_period").get<bool>();
  if (!j.at("thm67_agree").is_null()) r.thm67_agree = j.at("thm67_agree").get<bool>();
  if (!j.at("unit_group_order").is_null()) r.unit_group_order = BigInt(j.at("unit_group_order").get<std::string>());
  r.idempotent_ranks = j.at("idempotent_ranks").get<std::vector<std::size_t>>();
  if (!j.at("exact_period").is_null()) r.exact_period = j.at("exact_period").get<std::uint64_t>();
  r.singular_companion = j.at("singular_companion").get<bool>();
  return r;
}

std::string csv_header() {
  return "t,p,period,preperiod,classification,factors,discriminant,p_divides_discriminant,p_divides_period,"
         "thm67_agree,unit_group_order,idempotent_ranks,exact_period,singular_companion";
}

std::string to_csv_row(const PrimeReport& r) {
  std::ostringstream os;
  os << csv_quote(join_t(r.t, ",")) << ',' << r.p << ',' << r.period.get_str() << ',' << r.preperiod << ','
     << r.classification << ',' << csv_quote(factors_text(r.factors)) << ',' << r.discriminant.get_str() << ','
     << (r.p_divides_discriminant ? "true" : "false") << ',' << (r.p_divides_period ? "true" : "false") << ','
     << opt_bool(r.thm67_agree) << ',' << (r.unit_group_order ? r.unit_group_order->get_str() : "") << ','
     << ranks_text(r.idempotent_ranks) << ',' << (r.exact_period ? std::to_string(*r.exact_period) : "") << ','
     << (r.singular_companion ? "true" : "false");
  return os.str();
}

std::string table_header() {
  std::ostringstream os;
  os << std::left << std::setw(8) << "p" << std::setw(14) << "period" << std::setw(5) << "pre" << std::setw(10)
     << "class" << std::setw(8) << "p|disc" << std::setw(10) << "p|period" << std::setw(7) << "thm67"
     << std::setw(16) << "units" << std::setw(10) << "ranks"
     << "factors";
  return os.str();
}

std::string to_table_row(const PrimeReport& r) {
  std::ostringstream os;
  const std::string thm = r.thm67_agree ? (*r.thm67_agree ? "ok" : "FAIL") : "-";
  os << std::left << std::setw(8) << r.p << std::setw(14) << r.period.get_str() << std::setw(5) << r.preperiod
     << std::setw(10) << r.classification << std::setw(8) << (r.p_divides_discriminant ? "yes" : "no")
     << std::setw(10) << (r.p_divides_period ? "yes" : "no") << std::setw(7) << thm << std::setw(16)
     << (r.unit_group_order ? r.unit_group_order->get_str() : "-") << std::setw(10)
     << ranks_text(r.idempotent_ranks) << factors_text(r.factors);
  return os.str();
}

}  // namespace recurring
