#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "flagheight/charpoly.hpp"
#include "flagheight/coset_cache.hpp"
#include "flagheight/errors.hpp"
#include "flagheight/height.hpp"
#include "flagheight/jantzen.hpp"
#include "flagheight/parabolic.hpp"
#include "flagheight/rootsys.hpp"

namespace flagheight::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  if (trim(text).empty()) return parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  if (!text.empty() && text.back() == ',') parts.push_back("");
  return parts;
}

}  // namespace

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  for (const std::string& item : split_commas(text)) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw SpecError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split_commas(text)) {
    const auto slash = item.find('/');
    const std::string num = item.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : item.substr(slash + 1);
    Integer n, d;
    if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0 || d == 0)
      throw SpecError("not a rational number: '" + item + "'");
    out.push_back(ratio(n, d));
  }
  return out;
}

std::string numbering_table(const std::optional<std::string>& group) {
  std::ostringstream os;
  os << "Simple roots are numbered as follows (\"-\" single bond, \"=>\" or \"<=\" points to the short root):\n"
     << "  A_n  1 - 2 - ... - n\n"
     << "  B_n  1 - 2 - ... - (n-1) => n          alpha_n short\n"
     << "  C_n  1 - 2 - ... - (n-1) <= n          alpha_n long\n"
     << "  D_n  1 - 2 - ... - (n-2) - (n-1), and n attached to (n-2)\n"
     << "  E_n  1 - 3 - 4 - 5 - ... - n, and 2 attached to 4\n"
     << "  F4   1 - 2 => 3 - 4                    alpha_3, alpha_4 short\n"
     << "  G2   1 <= 2                            alpha_1 short\n"
     << "Products number the factors consecutively, left to right.\n"
     << "Weights are given in fundamental-weight coordinates (lambda = sum lambda_i omega_i);\n"
     << "theta lists the simple roots of the Levi factor, so theta = {} is the Borel subgroup.\n";
  if (group) {
    const RootSystem rs(CartanSpec::parse(*group));
    os << "\n" << rs.spec().to_string() << ":\n";
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const std::size_t f = rs.factor_of(i);
      const CartanFactor& factor = rs.spec().factors()[f];
      const bool simply_laced = factor.family == 'A' || factor.family == 'D' || factor.family == 'E';
      os << "  " << i + 1 << "  " << factor.family << factor.rank << "[" << i - rs.factor_offset(f) + 1 << "]";
      if (!simply_laced) {
        long factor_max = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j)
          if (rs.factor_of(j) == f) factor_max = std::max(factor_max, rs.root_norm(rs.simple_root(j)));
        os << (rs.root_norm(rs.simple_root(i)) == factor_max ? "  long " : "  short");
      }
      os << "  neighbours:";
      bool any = false;
      for (std::size_t j = 0; j < rs.rank(); ++j)
        if (j != i && rs.cartan_matrix()(i, j) != 0) {
          os << " " << j + 1;
          any = true;
        }
      if (!any) os << " none";
      os << "\n";
    }
  }
  return os.str();
}

namespace {

struct Context {
  std::shared_ptr<const RootSystem> rs;
  std::vector<std::size_t> theta;  // 0-based
  Weight lambda;
};

Context prepare(const JobSpec& job, bool need_lambda) {
  if (job.group.empty()) throw SpecError("--group is required");
  Context c;
  c.rs = std::make_shared<const RootSystem>(CartanSpec::parse(job.group));
  const std::size_t rank = c.rs->rank();
  for (std::size_t i : job.theta) {
    if (i < 1 || i > rank)
      throw SpecError("theta index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
    c.theta.push_back(i - 1);
  }
  std::sort(c.theta.begin(), c.theta.end());
  c.theta.erase(std::unique(c.theta.begin(), c.theta.end()), c.theta.end());
  if (need_lambda && job.lambda.size() != rank)
    throw SpecError("--lambda has " + std::to_string(job.lambda.size()) + " entries, expected " +
                    std::to_string(rank));
  c.lambda = Weight(job.lambda);
  if (job.y && job.y->size() != rank)
    throw SpecError("--y has " + std::to_string(job.y->size()) + " entries, expected " + std::to_string(rank));
  return c;
}

Json rational_json(const Rational& r) { return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}}; }

Json weight_json(const Weight& w) { return Json(std::vector<long>(w.coords().begin(), w.coords().end())); }

Json theta_json(const std::vector<std::size_t>& theta0) {
  Json a = Json::array();
  for (std::size_t i : theta0) a.push_back(i + 1);
  return a;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::all: return "all";
    case Method::substitution: return "substitution";
    case Method::fixed_point: return "fixed-point";
    case Method::harmo_bott: return "harmo-bott";
  }
  return "?";
}

CosetList cosets_for(const JobSpec& job, const RootSystem& rs, const std::vector<std::size_t>& theta,
                     std::ostream& err) {
  if (job.cache_dir) return coset_cache::load_or_compute(*job.cache_dir, rs, theta, job.cap, &err);
  return coset_representatives(rs, theta, job.cap);
}

Json height_document(const JobSpec& job, const Context& c, std::ostream& err) {
  const ParabolicData pd(c.rs, c.theta);
  psi_grading(pd, c.lambda);

  std::vector<HeightResult> results;
  if (job.method == Method::all || job.method == Method::substitution)
    results.push_back(height_substitution(pd, c.lambda));
  if (job.method != Method::substitution) {
    const CosetList cosets = cosets_for(job, *c.rs, c.theta, err);
    std::vector<Rational> y;
    if (job.y) {
      y = *job.y;
      require_regular_localization(pd, cosets, y);
    } else {
      y = default_localization(pd, cosets);
    }
    if (job.method == Method::all || job.method == Method::fixed_point)
      results.push_back(height_fixed_point(pd, c.lambda, cosets, y));
    if (job.method == Method::all || job.method == Method::harmo_bott)
      results.push_back(height_harmo_bott(pd, c.lambda, cosets, y));
  }

  Json agreed = nullptr;
  if (job.method == Method::all) {
    for (const HeightResult& r : results)
      if (r.value != results.front().value) {
        std::string detail;
        for (const HeightResult& s : results) detail += " " + to_string(s.method) + "=" + to_string(s.value);
        throw CrossCheckError("height methods disagree:" + detail);
      }
    agreed = true;
  }

  const HeightResult& r = results.front();
  Json cor82 = nullptr, conjecture = nullptr;
  if (c.rs->spec().is_simple()) {
    const auto coxeter = static_cast<std::uint64_t>(r.coxeter);
    cor82 = denominator_check(r, 2 * coxeter - 2);
    conjecture = denominator_check(r, coxeter - 1);
    if (!conjecture.get<bool>() && job.check_conjecture) {
      err << "conjecture bound c-1 = " << coxeter - 1 << " exceeded by the denominator of 2h:";
      for (const auto& [p, e] : r.denominator_factorization) err << " " << p << "^" << e;
      err << "\n";
    }
  }
  Json factors = Json::object();
  for (const auto& [p, e] : r.denominator_factorization) factors[std::to_string(p)] = e;

  Json doc;
  doc["group"] = c.rs->spec().to_string();
  doc["theta"] = theta_json(c.theta);
  doc["lambda"] = weight_json(c.lambda);
  doc["dim"] = pd.dim();
  doc["height"] = rational_json(r.value);
  doc["methods_agreed"] = agreed;
  doc["coxeter"] = r.coxeter;
  doc["cor82_ok"] = cor82;
  doc["conjecture_ok"] = conjecture;
  doc["method"] = method_name(job.method);
  doc["denominator_2h"] = factors;
  return doc;
}

// Splits a virtual character into irreducibles, largest |mu + rho| first.
std::vector<std::pair<Weight, long>> decompose(const RootSystem& rs, FormalCharacter ch) {
  std::vector<std::pair<Weight, long>> out;
  while (!ch.is_zero()) {
    const Weight* best = nullptr;
    Rational best_norm = -1;
    for (const auto& [mu, m] : ch.multiplicities()) {
      if (!is_dominant(mu)) continue;
      const Weight shifted = mu + rs.rho();
      const Rational norm = rs.inner_product(shifted, shifted);
      if (norm > best_norm) {
        best_norm = norm;
        best = &mu;
      }
    }
    if (!best) throw std::logic_error("virtual character without dominant weights");
    const Weight top = *best;
    const long m = ch.multiplicity(top);
    out.emplace_back(top, m);
    ch.add(freudenthal(rs, top), -m);
  }
  return out;
}

Json character_json(const FormalCharacter& ch) {
  Json a = Json::array();
  for (auto it = ch.multiplicities().rbegin(); it != ch.multiplicities().rend(); ++it)
    a.push_back({{"weight", weight_json(it->first)}, {"mult", it->second}});
  return a;
}

Json jantzen_document(const Context& c) {
  for (std::size_t i : c.theta)
    if (c.lambda[i] != 0)
      throw MathInputError("lambda_" + std::to_string(i + 1) + " must vanish for theta containing " +
                           std::to_string(i + 1));
  const ParabolicData pd(c.rs, c.theta);
  const LogCharacterCombo combo = jantzen_rhs(pd, c.lambda);
  const auto bwb = to_dominant_dotted(*c.rs, c.lambda);

  Json terms = Json::array();
  for (const auto& [p, ch] : combo.terms()) {
    Json irreducibles = Json::array();
    for (const auto& [mu, m] : decompose(*c.rs, ch))
      irreducibles.push_back({{"highest_weight", weight_json(mu)}, {"coefficient", m}});
    terms.push_back({{"prime", p}, {"irreducibles", irreducibles}, {"character", character_json(ch)}});
  }
  Json zero = nullptr;
  if (bwb) {
    bool all_zero = true;
    for (const auto& [p, m] : lambda0_component(combo, *c.rs, c.lambda)) all_zero = all_zero && m == 0;
    zero = all_zero;
  }

  Json doc;
  doc["group"] = c.rs->spec().to_string();
  doc["theta"] = theta_json(c.theta);
  doc["lambda"] = weight_json(c.lambda);
  doc["lambda0"] = bwb ? weight_json(bwb->lambda0) : Json(nullptr);
  doc["lambda0_component_zero"] = zero;
  doc["terms"] = terms;
  return doc;
}

void require_dominant(const Weight& lambda) {
  if (!is_dominant(lambda)) throw MathInputError("weight " + lambda.to_string() + " is not dominant");
}

Json char_document(const Context& c) {
  require_dominant(c.lambda);
  const FormalCharacter ch = freudenthal(*c.rs, c.lambda);
  Json doc;
  doc["group"] = c.rs->spec().to_string();
  doc["lambda"] = weight_json(c.lambda);
  doc["dim"] = ch.degree();
  doc["weights"] = character_json(ch);
  return doc;
}

Json dim_document(const Context& c) {
  require_dominant(c.lambda);
  Json doc;
  doc["group"] = c.rs->spec().to_string();
  doc["lambda"] = weight_json(c.lambda);
  doc["dim"] = weyl_dim_exact(*c.rs, c.lambda).get_str();
  return doc;
}

Json bwb_document(const Context& c) {
  const auto bwb = to_dominant_dotted(*c.rs, c.lambda);
  Json doc;
  doc["group"] = c.rs->spec().to_string();
  doc["lambda"] = weight_json(c.lambda);
  doc["singular"] = !bwb;
  if (bwb) {
    Json word = Json::array();
    for (int i : bwb->w.word()) word.push_back(i + 1);
    doc["w"] = word;
    doc["length"] = bwb->degree();
    doc["lambda0"] = weight_json(bwb->lambda0);
    doc["dim"] = weyl_dim_exact(*c.rs, bwb->lambda0).get_str();
  }
  return doc;
}

Json scan_document(const JobSpec& job, const Context& c, std::ostream& err) {
  Json rows = Json::array();
  const std::size_t rank = c.rs->rank();
  for (std::size_t k = 0; k < rank; ++k) {
    Context item = c;
    item.theta.clear();
    for (std::size_t i = 0; i < rank; ++i)
      if (i != k) item.theta.push_back(i);
    item.lambda = c.rs->fundamental_weight(k);
    JobSpec sub = job;
    sub.y.reset();
    rows.push_back(height_document(sub, item, err));
  }
  Json doc;
  doc["group"] = c.rs->spec().to_string();
  doc["family"] = "maximal parabolics, lambda = omega_k";
  doc["method"] = method_name(job.method);
  doc["rows"] = rows;
  return doc;
}

// Scalar rendering for text and CSV output.
std::string flat(const Json& v, char list_sep) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("num") && v.contains("den")) {
    const std::string den = v["den"].get<std::string>();
    return v["num"].get<std::string>() + (den == "1" ? "" : "/" + den);
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, list_sep) : "") + flat(v[i], list_sep);
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) s += (s.empty() ? "" : " ") + it.key() + "^" + flat(*it, list_sep);
    return s;
  }
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void csv_table(std::ostream& out, const std::vector<std::string>& header, const std::vector<Json>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const Json& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
      out << (i ? "," : "") << csv_field(row.contains(header[i]) ? flat(row[header[i]], ';') : "");
    out << "\n";
  }
}

std::vector<std::string> keys_of(const Json& obj) {
  std::vector<std::string> k;
  for (auto it = obj.begin(); it != obj.end(); ++it) k.push_back(it.key());
  return k;
}

void render_csv(std::ostream& out, Command command, const Json& doc) {
  switch (command) {
    case Command::scan: {
      const std::vector<Json> rows(doc["rows"].begin(), doc["rows"].end());
      csv_table(out, rows.empty() ? std::vector<std::string>{} : keys_of(rows.front()), rows);
      return;
    }
    case Command::character: {
      std::vector<Json> rows(doc["weights"].begin(), doc["weights"].end());
      csv_table(out, {"weight", "mult"}, rows);
      return;
    }
    case Command::jantzen_rhs: {
      std::vector<Json> rows;
      for (const Json& term : doc["terms"])
        for (const Json& irr : term["irreducibles"])
          rows.push_back({{"prime", term["prime"]}, {"highest_weight", irr["highest_weight"]},
                          {"coefficient", irr["coefficient"]}});
      csv_table(out, {"prime", "highest_weight", "coefficient"}, rows);
      return;
    }
    default: csv_table(out, keys_of(doc), {doc});
  }
}

void render_text(std::ostream& out, Command command, const Json& doc) {
  auto aligned = [&out](const Json& obj, const std::string& indent) {
    std::size_t width = 0;
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!it->is_array() || it.key() == "theta" || it.key() == "lambda" || it.key() == "lambda0" || it.key() == "w")
        width = std::max(width, it.key().size());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      if (it->is_array() && !(it.key() == "theta" || it.key() == "lambda" || it.key() == "lambda0" || it.key() == "w"))
        continue;
      out << indent << it.key() << std::string(width - it.key().size() + 2, ' ') << flat(*it, ',') << "\n";
    }
  };
  aligned(doc, "");
  if (command == Command::scan) {
    for (const Json& row : doc["rows"]) {
      out << "\n";
      aligned(row, "  ");
    }
  } else if (command == Command::character) {
    for (const Json& w : doc["weights"]) out << "  (" << flat(w["weight"], ',') << ")  " << w["mult"] << "\n";
  } else if (command == Command::jantzen_rhs) {
    for (const Json& term : doc["terms"]) {
      out << "  log " << term["prime"] << ":";
      for (const Json& irr : term["irreducibles"]) {
        const long c = irr["coefficient"].get<long>();
        out << " " << (c < 0 ? "-" : "+") << (std::abs(c) == 1 ? "" : std::to_string(std::abs(c)) + "*") << "V("
            << flat(irr["highest_weight"], ',') << ")";
      }
      out << "\n";
    }
  }
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    Json doc;
    switch (job.command) {
      case Command::height: doc = height_document(job, prepare(job, true), err); break;
      case Command::jantzen_rhs: doc = jantzen_document(prepare(job, true)); break;
      case Command::character: doc = char_document(prepare(job, true)); break;
      case Command::dim: doc = dim_document(prepare(job, true)); break;
      case Command::bwb: doc = bwb_document(prepare(job, true)); break;
      case Command::scan: doc = scan_document(job, prepare(job, false), err); break;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    doc["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    switch (job.output) {
      case Output::json: out << doc.dump(2) << "\n"; break;
      case Output::csv: render_csv(out, job.command, doc); break;
      case Output::text: render_text(out, job.command, doc); break;
    }
    return kOk;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const MathInputError& e) {
    err << "error: " << e.what() << "\n";
    return kMathInput;
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << " (size " << e.size() << ", cap " << e.cap() << "; raise --cap to override)\n";
    return kSizeCap;
  } catch (const CrossCheckError& e) {
    err << "internal error: " << e.what() << "\n";
    return kCrossCheck;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact heights of flag varieties and Jantzen sum data from root systems"};
  app.set_version_flag("--version", std::string(FLAGHEIGHT_VERSION));
  bool print_numbering = false;
  std::string numbering_group;
  app.add_flag("--print-numbering", print_numbering, "Print the simple-root numbering and exit");
  app.add_option("--group", numbering_group, "Cartan type for --print-numbering");

  JobSpec job;
  std::string theta_text, lambda_text, y_text, cache_text;
  const std::map<std::string, Method> methods{{"all", Method::all},
                                              {"substitution", Method::substitution},
                                              {"fixed-point", Method::fixed_point},
                                              {"harmo-bott", Method::harmo_bott}};
  const std::map<std::string, Output> outputs{{"json", Output::json}, {"csv", Output::csv}, {"text", Output::text}};

  const std::vector<std::pair<Command, std::pair<const char*, const char*>>> commands{
      {Command::height, {"height", "Global height of G/P with the line bundle of lambda"}},
      {Command::jantzen_rhs, {"jantzen-rhs", "Right-hand side of the Jantzen sum formula, by prime"}},
      {Command::character, {"char", "Weight multiplicities of the irreducible module of highest weight lambda"}},
      {Command::dim, {"dim", "Dimension of the irreducible module of highest weight lambda"}},
      {Command::bwb, {"bwb", "Borel-Weil-Bott data: w with w^-1 . lambda dominant"}},
      {Command::scan, {"scan", "Heights over all maximal parabolics with lambda = omega_k"}},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [command, names] : commands) {
    CLI::App* sub = app.add_subcommand(names.first, names.second);
    sub->add_option("--group", job.group, "Cartan type, e.g. A3, B2xA1, E6")->required();
    sub->add_option("--theta", theta_text, "Levi simple roots, comma list of 1-based indices (empty: Borel)");
    sub->add_option("--lambda", lambda_text, "Weight in fundamental-weight coordinates, comma list");
    sub->add_option("--method", job.method, "all, substitution, fixed-point or harmo-bott")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    sub->add_option("--output", job.output, "json, csv or text")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    sub->add_option("--y", y_text, "Localization vector by its values on the simple roots, comma list");
    sub->add_option("--cap", job.cap, "Largest Weyl group or coset enumeration allowed");
    sub->add_option("--cache-dir", cache_text, "Directory for cached coset representatives")
        ->envname("FLAGHEIGHT_CACHE_DIR");
    sub->add_flag("--check-conjecture", job.check_conjecture, "Report violations of the bound c-1 on stderr");
    subs.emplace_back(sub, command);
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  if (print_numbering) {
    try {
      out << numbering_table(numbering_group.empty() ? std::nullopt : std::optional<std::string>(numbering_group));
    } catch (const SpecError& e) {
      err << "error: " << e.what() << "\n";
      return kParseError;
    }
    return kOk;
  }
  bool chosen = false;
  for (const auto& [sub, command] : subs)
    if (sub->parsed()) {
      job.command = command;
      chosen = true;
    }
  if (!chosen) {
    err << app.help();
    return kParseError;
  }

  try {
    for (long i : parse_int_list(theta_text)) {
      if (i < 1) throw SpecError("theta indices are 1-based");
      job.theta.push_back(static_cast<std::size_t>(i));
    }
    job.lambda = parse_int_list(lambda_text);
    if (!trim(y_text).empty()) job.y = parse_rational_list(y_text);
    if (!cache_text.empty()) job.cache_dir = cache_text;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return run(job, out, err);
}

}  // namespace flagheight::cli
