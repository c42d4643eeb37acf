#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcf/error.hpp"
#include "mcf/identities.hpp"
#include "mcf/integer.hpp"
#include "mcf/jacobi.hpp"
#include "mcf/mcf_core.hpp"
#include "mcf/tiling.hpp"

namespace mcf::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kDocumentVersion = 1;

// ---------------------------------------------------------------------------
// Input

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

Integer integer_token(const std::string& token) {
  if (token == "_") return 0;
  return parse_integer(token);
}

std::vector<Integer> integer_list(std::string_view text) {
  std::vector<Integer> out;
  if (text.empty()) return out;
  for (const auto& token : split(text, ',')) out.push_back(integer_token(token));
  return out;
}

Integer json_integer(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_number_unsigned()) return Integer(v.get<unsigned long long>());
  if (v.is_string()) return integer_token(v.get<std::string>());
  throw UsageError("expected an integer or decimal string, got " + v.dump());
}

std::vector<Integer> json_integer_list(const Json& v) {
  if (!v.is_array()) throw UsageError("expected an array, got " + v.dump());
  std::vector<Integer> out;
  for (const auto& item : v) out.push_back(json_integer(item));
  return out;
}

/// Everything a command may read, from either source.
struct Input {
  std::vector<Integer> a, b, c;
  std::vector<std::string> values;
  std::optional<std::size_t> degree;
  std::optional<std::vector<std::vector<Integer>>> bounds;
};

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input document '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("input document '" + path + "' is not valid JSON: " + e.what());
  }
}

Input read_input(const JobSpec& job) {
  const bool has_inline = job.a || job.b || job.c || job.values || job.bounds;
  if (job.input_path && has_inline) {
    throw UsageError("give either --input or inline values, not both");
  }
  Input in;
  try {
    if (job.input_path) {
      const Json doc = load_document(*job.input_path);
      if (!doc.is_object()) throw UsageError("input document must be a JSON object");
      if (doc.contains("a")) in.a = json_integer_list(doc["a"]);
      if (doc.contains("b")) in.b = json_integer_list(doc["b"]);
      if (doc.contains("c")) in.c = json_integer_list(doc["c"]);
      if (doc.contains("values")) {
        for (const auto& v : doc["values"]) {
          in.values.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
      }
      if (doc.contains("degree")) in.degree = doc["degree"].get<std::size_t>();
      if (doc.contains("bounds")) {
        std::vector<std::vector<Integer>> rows;
        for (const auto& row : doc["bounds"]) rows.push_back(json_integer_list(row));
        in.bounds = std::move(rows);
      }
    } else {
      if (job.a) in.a = integer_list(*job.a);
      if (job.b) in.b = integer_list(*job.b);
      if (job.c) in.c = integer_list(*job.c);
      if (job.values) in.values = split(*job.values, ',');
      if (job.bounds) {
        std::vector<std::vector<Integer>> rows;
        for (const auto& row : split(*job.bounds, ';')) rows.push_back(integer_list(row));
        in.bounds = std::move(rows);
      }
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed input document: ") + e.what());
  }
  if (job.degree) in.degree = job.degree;
  return in;
}

/// Missing b or c default to zeros of the same length as a.
void fill_missing(Input& in) {
  if (in.a.empty()) throw UsageError("missing partial quotients / bounds 'a'");
  if (in.b.empty()) in.b.assign(in.a.size(), Integer(0));
  if (in.c.empty()) in.c.assign(in.a.size(), Integer(0));
}

std::vector<Integer> prefix(const std::vector<Integer>& v, std::size_t n) {
  if (n >= v.size()) {
    throw UsageError("--n " + std::to_string(n) + " is past the last index " +
                     std::to_string(v.size() - 1));
  }
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

void apply_n(const JobSpec& job, Input& in) {
  if (!job.n) return;
  in.a = prefix(in.a, *job.n);
  if (in.b.size() == 0 || in.c.size() == 0) return;
  in.b = prefix(in.b, *job.n);
  in.c = prefix(in.c, *job.n);
}

/// c_0 written as "_" (or 0) means the conventional 1.
PartialQuotients quotients_from(Input in) {
  fill_missing(in);
  if (!in.c.empty() && in.c.front() == 0) in.c.front() = 1;
  return PartialQuotients(std::move(in.a), std::move(in.b), std::move(in.c));
}

HeightConditions conditions_from(Input in) {
  fill_missing(in);
  return HeightConditions(std::move(in.a), std::move(in.b), std::move(in.c));
}

QuotientTable table_from(const Input& in) {
  if (!in.bounds) throw UsageError("missing --bounds (or \"bounds\" in the input document)");
  QuotientTable table(*in.bounds);
  if (in.degree && *in.degree != table.degree()) {
    throw UsageError("degree " + std::to_string(*in.degree) + " needs " +
                     std::to_string(*in.degree + 1) + " bound rows, got " +
                     std::to_string(table.rows().size()));
  }
  return table;
}

std::uint64_t enumeration_budget(const JobSpec& job) {
  if (job.budget) return *job.budget;
  if (const char* env = std::getenv("MCF_ENUM_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("MCF_ENUM_BUDGET is not a nonnegative integer: '") + env + "'");
  }
  return kDefaultEnumerationBudget;
}

// ---------------------------------------------------------------------------
// Output

/// Integers inside 64 bits print as JSON numbers, larger ones as strings.
Json json_of(const Integer& v) {
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Json json_of(std::span<const Integer> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(json_of(v));
  return arr;
}

std::string approx(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::string joined(std::span<const Integer> values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

/// Every emitted document starts with the schema version.
void emit(std::ostream& out, const Json& doc) {
  Json versioned{{"version", kDocumentVersion}};
  for (const auto& [key, value] : doc.items()) {
    if (key != "version") versioned[key] = value;
  }
  out << versioned.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Commands

template <class T>
std::vector<T> parse_values(const std::vector<std::string>& tokens, bool as_float) {
  std::vector<T> values;
  for (const auto& t : tokens) {
    if constexpr (std::is_same_v<T, double>) {
      (void)as_float;
      try {
        std::size_t used = 0;
        values.push_back(std::stod(t, &used));
        if (used != t.size()) throw std::invalid_argument(t);
      } catch (const std::exception&) {
        // Accept p/q in float mode too.
        try {
          values.push_back(to_double(parse_rational(t)));
        } catch (const Error&) {
          throw UsageError("cannot parse value '" + t + "'");
        }
      }
    } else {
      try {
        values.push_back(parse_rational(t));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
  }
  return values;
}

template <class Result>
void print_degree2_expansion(const JobSpec& job, const Result& r, std::ostream& out) {
  const PartialQuotients& q = r.quotients;
  if (job.format == Format::json) {
    Json doc;
    doc["a"] = json_of(q.a());
    doc["b"] = json_of(q.b());
    doc["c"] = json_of(q.c());
    doc["stop"] = to_string(r.stop);
    doc["last_step"] = r.last_step;
    emit(out, doc);
    return;
  }
  out << "a: " << joined(q.a()) << '\n'
      << "b: " << joined(q.b()) << '\n'
      << "c: " << joined(q.c()) << '\n'
      << "stop: " << to_string(r.stop) << '\n'
      << "last_step: " << r.last_step << '\n';
}

template <class Result>
void print_perron_expansion(const JobSpec& job, const Result& r, std::ostream& out) {
  const auto& rows = r.quotients.rows();
  if (job.format == Format::json) {
    Json doc;
    doc["degree"] = r.degree();
    Json bounds = Json::array();
    for (const auto& row : rows) bounds.push_back(json_of(row));
    doc["bounds"] = bounds;
    doc["stop"] = to_string(r.stop);
    doc["last_step"] = r.last_step;
    emit(out, doc);
    return;
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    out << "a" << (i + 1) << ": " << joined(rows[i]) << '\n';
  }
  out << "c: " << joined(rows.back()) << '\n'
      << "stop: " << to_string(r.stop) << '\n'
      << "last_step: " << r.last_step << '\n';
}

int cmd_expand(const JobSpec& job, std::ostream& out) {
  const Input in = read_input(job);
  if (in.values.empty()) throw UsageError("expand needs --values");
  const bool as_float = job.use_float || job.zero_tol.has_value();
  const double tol = job.zero_tol.value_or(1e-12);
  if (in.values.size() == 2) {
    if (as_float) {
      const auto v = parse_values<double>(in.values, true);
      print_degree2_expansion(job, jacobi_expand_float(v[0], v[1], job.max_steps, tol), out);
    } else {
      const auto v = parse_values<Rational>(in.values, false);
      print_degree2_expansion(job, jacobi_expand(v[0], v[1], job.max_steps), out);
    }
  } else if (as_float) {
    print_perron_expansion(job, perron_expand_float(parse_values<double>(in.values, true), job.max_steps, tol), out);
  } else {
    print_perron_expansion(job, perron_expand(parse_values<Rational>(in.values, false), job.max_steps), out);
  }
  return kExitOk;
}

int cmd_convergents(const JobSpec& job, std::ostream& out) {
  Input in = read_input(job);
  if (in.bounds) {
    QuotientTable table = table_from(in);
    if (job.n) {
      std::vector<std::vector<Integer>> rows;
      for (const auto& row : table.rows()) rows.push_back(prefix(row, *job.n));
      table = QuotientTable(std::move(rows));
    }
    const auto vectors = perron_convergents(table);
    const std::size_t first = job.all ? 0 : vectors.size() - 1;
    Json list = Json::array();
    for (std::size_t i = first; i < vectors.size(); ++i) {
      if (job.format == Format::json) {
        list.push_back({{"n", i}, {"vector", json_of(vectors[i])}});
      } else {
        if (job.all) out << "n=" << i << ' ';
        out << "X=" << joined(vectors[i]) << '\n';
      }
    }
    if (job.format == Format::json) emit(out, Json{{"degree", table.degree()}, {"convergents", list}});
    return kExitOk;
  }

  apply_n(job, in);
  const PartialQuotients pq = quotients_from(std::move(in));
  const std::string method = job.mode.empty() ? "matrix" : job.mode;
  if (method == "head") {
    const Integer A = numerator_by_head_recurrence(pq);
    if (job.format == Format::json) {
      emit(out, Json{{"n", pq.last_index()}, {"A", json_of(A)}});
    } else {
      out << "A=" << A.str() << '\n';
    }
    return kExitOk;
  }
  if (method != "matrix" && method != "tail") {
    throw UsageError("unknown convergent method '" + method + "' (matrix, tail, head)");
  }
  const auto triples =
      method == "matrix" ? convergents_by_matrix(pq) : convergents_by_tail_recurrence(pq);
  const std::size_t first = job.all ? 0 : triples.size() - 1;
  Json list = Json::array();
  for (std::size_t i = first; i < triples.size(); ++i) {
    const auto& t = triples[i];
    if (job.format == Format::json) {
      list.push_back({{"n", t.index}, {"A", json_of(t.A)}, {"B", json_of(t.B)}, {"C", json_of(t.C)}});
    } else {
      if (job.all) out << "n=" << t.index << ' ';
      out << "A=" << t.A.str() << " B=" << t.B.str() << " C=" << t.C.str() << '\n';
    }
  }
  if (job.format == Format::json) emit(out, Json{{"convergents", list}});
  return kExitOk;
}

int cmd_evaluate(const JobSpec& job, std::ostream& out) {
  Input in = read_input(job);
  apply_n(job, in);
  if (job.classical) {
    if (in.a.empty()) throw UsageError("missing 'a'");
    if (in.b.empty()) in.b.assign(in.a.size(), Integer(0));
    const Rational v = evaluate_classical_cf(in.a, in.b);
    if (job.format == Format::json) {
      emit(out, Json{{"value", to_string(v)}, {"approx", to_double(v)}});
    } else {
      out << "value: " << to_string(v) << " (" << approx(to_double(v)) << ")\n";
    }
    return kExitOk;
  }
  const RationalPair pair = evaluate_finite(quotients_from(std::move(in)));
  if (job.format == Format::json) {
    emit(out, Json{{"first", to_string(pair.first)},
                   {"second", to_string(pair.second)},
                   {"first_approx", to_double(pair.first)},
                   {"second_approx", to_double(pair.second)}});
  } else {
    out << "first: " << to_string(pair.first) << " (" << approx(to_double(pair.first)) << ")\n"
        << "second: " << to_string(pair.second) << " (" << approx(to_double(pair.second)) << ")\n";
  }
  return kExitOk;
}

void print_count(const JobSpec& job, const char* what, const Integer& value, std::ostream& out) {
  if (job.format == Format::json) {
    emit(out, Json{{"kind", what}, {"count", json_of(value)}});
  } else {
    out << value.str() << '\n';
  }
}

int cmd_count(const JobSpec& job, std::ostream& out) {
  Input in = read_input(job);
  apply_n(job, in);
  const HeightConditions h = conditions_from(std::move(in));
  const std::string kind = job.mode.empty() ? "A" : job.mode;
  const EnumerationOptions opts{enumeration_budget(job)};
  Integer value;
  if (kind == "A") {
    value = job.oracle ? Integer(enumerate_plain(h, opts).size()) : count_fast(h);
  } else if (kind == "B") {
    value = job.oracle ? Integer(enumerate_B(h, opts).size()) : count_B(h);
  } else if (kind == "C") {
    value = job.oracle ? Integer(enumerate_plain(h.shifted(), opts).size()) : count_C(h);
  } else {
    throw UsageError("unknown count kind '" + kind + "' (A, B, C)");
  }
  print_count(job, kind.c_str(), value, out);
  return kExitOk;
}

Integer wrap_bar_of(const JobSpec& job) {
  try {
    return parse_integer(job.wrap_bar);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_enumerate(const JobSpec& job, std::ostream& out) {
  Input in = read_input(job);
  apply_n(job, in);
  const HeightConditions h = conditions_from(std::move(in));
  const EnumerationOptions opts{enumeration_budget(job)};
  const std::string mode = job.mode.empty() ? "plain" : job.mode;
  std::vector<Tiling> tilings;
  if (mode == "plain") {
    tilings = enumerate_plain(h, opts);
  } else if (mode == "B") {
    tilings = enumerate_B(h, opts);
  } else if (mode == "circular") {
    tilings = enumerate_circular(h, wrap_bar_of(job), opts);
  } else if (mode == "mixed") {
    tilings = enumerate_mixed(h, opts);
  } else {
    throw UsageError("unknown enumeration mode '" + mode + "' (plain, B, circular, mixed)");
  }
  if (job.format == Format::json) {
    Json list = Json::array();
    for (const auto& t : tilings) list.push_back(to_string(t));
    emit(out, Json{{"mode", mode}, {"count", tilings.size()}, {"tilings", list}});
  } else {
    for (const auto& t : tilings) out << to_string(t) << '\n';
  }
  return kExitOk;
}

int cmd_count_circular(const JobSpec& job, std::ostream& out) {
  Input in = read_input(job);
  apply_n(job, in);
  const HeightConditions h = conditions_from(std::move(in));
  const Integer wrap = wrap_bar_of(job);
  const Integer value =
      job.oracle ? Integer(enumerate_circular(h, wrap, {enumeration_budget(job)}).size())
                 : count_circular(h, wrap);
  print_count(job, "circular", value, out);
  return kExitOk;
}

int cmd_count_mixed(const JobSpec& job, std::ostream& out) {
  Input in = read_input(job);
  apply_n(job, in);
  const HeightConditions h = conditions_from(std::move(in));
  const Integer value =
      job.oracle ? Integer(enumerate_mixed(h, {enumeration_budget(job)}).size()) : count_mixed(h);
  print_count(job, "mixed", value, out);
  return kExitOk;
}

int cmd_count_degree_m(const JobSpec& job, std::ostream& out) {
  const QuotientTable table = table_from(read_input(job));
  const Integer value = job.oracle
                            ? count_degree_m_by_enumeration(table, {enumeration_budget(job)})
                            : count_degree_m(table);
  print_count(job, "degree_m", value, out);
  return kExitOk;
}

void print_report(const JobSpec& job, const IdentityReport& r, std::ostream& out) {
  if (job.format == Format::json) {
    Json doc{{"identity", r.name},
             {"verified", r.verified()},
             {"verified_up_to", r.verified_up_to},
             {"max_abs_error", r.max_abs_error}};
    if (r.limit_error) doc["limit_error"] = *r.limit_error;
    if (r.witness) doc["witness"] = *r.witness;
    emit(out, doc);
    return;
  }
  out << "identity: " << r.name << '\n'
      << "verified_up_to: " << r.verified_up_to << '\n'
      << "max_abs_error: " << approx(r.max_abs_error) << '\n';
  if (r.limit_error) out << "limit_error: " << approx(*r.limit_error) << '\n';
  if (r.witness) out << "witness: " << *r.witness << '\n';
}

int cmd_identities(const JobSpec& job, std::ostream& out) {
  if (job.check == "factorial") {
    const IdentityReport r = check_factorial_identity(job.n.value_or(20));
    print_report(job, r, out);
    return r.verified() ? kExitOk : kExitDomainError;
  }
  if (job.check == "e") {
    const IdentityReport r = check_e_fraction(job.n.value_or(15));
    print_report(job, r, out);
    return r.verified() ? kExitOk : kExitDomainError;
  }
  if (job.check == "limit") {
    const std::size_t n = job.n.value_or(15);
    const Rational exact = estimate_limit_exact(n);
    if (job.format == Format::json) {
      emit(out, Json{{"n", n}, {"estimate", to_double(exact)}, {"exact", to_string(exact)}});
    } else {
      out << "n: " << n << '\n'
          << "estimate: " << approx(to_double(exact)) << '\n'
          << "exact: " << to_string(exact) << '\n';
    }
    return kExitOk;
  }
  throw UsageError("unknown identity '" + job.check + "' (factorial, limit, e)");
}

void report_error(const JobSpec& job, std::string_view kind, std::string_view message,
                  std::ostream& err) {
  if (job.format == Format::json) {
    err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  } else {
    err << "error[" << kind << "]: " << message << '\n';
  }
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    switch (job.command) {
      case Command::expand: return cmd_expand(job, out);
      case Command::convergents: return cmd_convergents(job, out);
      case Command::evaluate: return cmd_evaluate(job, out);
      case Command::count: return cmd_count(job, out);
      case Command::enumerate: return cmd_enumerate(job, out);
      case Command::count_circular: return cmd_count_circular(job, out);
      case Command::count_mixed: return cmd_count_mixed(job, out);
      case Command::count_degree_m: return cmd_count_degree_m(job, out);
      case Command::identities: return cmd_identities(job, out);
    }
  } catch (const UsageError& e) {
    report_error(job, "UsageError", e.what(), err);
    return kExitUsageError;
  } catch (const Error& e) {
    report_error(job, to_string(e.kind()), e.what(), err);
    return kExitDomainError;
  }
  return kExitUsageError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multidimensional continued fractions: convergents, Jacobi/Perron expansion, "
               "tiling counts"};
  app.require_subcommand(1);
  JobSpec job;
  std::string format = "text";

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_abc = [&](CLI::App* sub) {
    sub->add_option("--a", job.a, "Comma-separated a_0..a_n");
    sub->add_option("--b", job.b, "Comma-separated b_0..b_n ('_' = placeholder 0)");
    sub->add_option("--c", job.c, "Comma-separated c_0..c_n ('_' = placeholder 0)");
    sub->add_option("--input", job.input_path, "JSON document {\"a\":[...],\"b\":[...],\"c\":[...]}");
    sub->add_option("--n", job.n, "Use indices 0..n only");
    add_format(sub);
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", job.budget, "Enumeration budget (default 10^7 or $MCF_ENUM_BUDGET)");
  };

  auto* expand = app.add_subcommand("expand", "Jacobi (m=2) or Perron (m values) expansion");
  expand->add_option("--values", job.values, "Comma-separated inputs, e.g. 5/3,7/3");
  expand->add_option("--input", job.input_path, "JSON document with \"values\"");
  expand->add_option("--max-steps", job.max_steps, "Maximum number of quotient indices");
  expand->add_option("--zero-tol", job.zero_tol, "Floating mode zero tolerance");
  expand->add_flag("--float", job.use_float, "Floating-point mode");
  add_format(expand);

  auto* convergents = app.add_subcommand("convergents", "Convergent triples (A_n, B_n, C_n)");
  add_abc(convergents);
  convergents->add_option("--method", job.mode, "matrix | tail | head");
  convergents->add_option("--bounds", job.bounds, "Degree-m table rows separated by ';'");
  convergents->add_option("--degree", job.degree, "Degree m of the table");
  convergents->add_flag("--all", job.all, "Print every index, not just the last");

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a finite MCF exactly");
  add_abc(evaluate);
  evaluate->add_flag("--classical", job.classical, "Classical fraction a_0 + b_1/(a_1 + ...)");

  auto* count = app.add_subcommand("count", "Count tilings (A, B or C)");
  add_abc(count);
  add_budget(count);
  count->add_option("--kind", job.mode, "A | B | C");
  count->add_flag("--oracle", job.oracle, "Count by brute-force enumeration");

  auto* enumerate = app.add_subcommand("enumerate", "List tilings, one per line");
  add_abc(enumerate);
  add_budget(enumerate);
  enumerate->add_option("--mode", job.mode, "plain | B | circular | mixed");
  enumerate->add_option("--wrap-bar", job.wrap_bar, "Bound for bars over cells n-1, n, 0");

  auto* circular = app.add_subcommand("count-circular", "Count tilings of the circular board");
  add_abc(circular);
  add_budget(circular);
  circular->add_option("--wrap-bar", job.wrap_bar, "Bound for bars over cells n-1, n, 0");
  circular->add_flag("--oracle", job.oracle, "Count by brute-force enumeration");

  auto* mixed = app.add_subcommand("count-mixed", "Count mixed tilings (signed b, c)");
  add_abc(mixed);
  add_budget(mixed);
  mixed->add_flag("--oracle", job.oracle, "Count by brute-force enumeration");

  auto* degree_m = app.add_subcommand("count-degree-m", "Count tilings with tiles of length 1..m+1");
  degree_m->add_option("--bounds", job.bounds, "Rows separated by ';', e.g. 1,1,1;0,1,1");
  degree_m->add_option("--degree", job.degree, "Degree m (rows = m+1)");
  degree_m->add_option("--input", job.input_path, "JSON document {\"degree\":m,\"bounds\":[[...]]}");
  degree_m->add_flag("--oracle", job.oracle, "Count by brute-force enumeration");
  add_budget(degree_m);
  add_format(degree_m);

  auto* identities = app.add_subcommand("identities", "Check the factorial, limit and e identities");
  identities->add_option("--check", job.check, "factorial | limit | e")
      ->check(CLI::IsMember({"factorial", "limit", "e"}));
  identities->add_option("--n", job.n, "Largest index");
  add_format(identities);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error[UsageError]: " << e.what() << '\n';
    return kExitUsageError;
  }

  job.format = format == "json" ? Format::json : Format::text;
  const std::pair<CLI::App*, Command> table[] = {
      {expand, Command::expand},           {convergents, Command::convergents},
      {evaluate, Command::evaluate},       {count, Command::count},
      {enumerate, Command::enumerate},     {circular, Command::count_circular},
      {mixed, Command::count_mixed},       {degree_m, Command::count_degree_m},
      {identities, Command::identities},
  };
  for (const auto& [sub, command] : table) {
    if (sub->parsed()) job.command = command;
  }
  return run(job, out, err);
}

}  // namespace mcf::cli
