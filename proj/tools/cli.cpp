#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kohn/berger.hpp"
#include "kohn/error.hpp"
#include "kohn/families.hpp"
#include "kohn/genfun.hpp"
#include "kohn/groups.hpp"
#include "kohn/io.hpp"
#include "kohn/lens.hpp"

namespace kohn::cli {

using io::json;

harmonic::Quotient parse_quotient(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t");
  if (i != std::string::npos && text.compare(i, 6, "GammaI") == 0) {
    auto rep = groups::parse_type_one(text);
    return groups::type_one_group(rep.params, rep.k, rep.l);
  }
  return lens::parse_lens(text);
}

std::pair<long, long> parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    std::size_t used = 0;
    if (pos == std::string::npos) {
      long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return {v, v};
    }
    const std::string a = text.substr(0, pos), b = text.substr(pos + 2);
    long lo = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument("");
    long hi = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("range must look like a..b with a <= b: " + text);
  }
}

int resolve_workers(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw std::invalid_argument("--workers must be at least 1");
    return *flag;
  }
  if (const char* env = std::getenv("KOHN_WORKERS")) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(env, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0' || v < 1) throw std::invalid_argument("KOHN_WORKERS must be a positive integer");
    return v;
  }
  return 0;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << v;
  return out.str();
}

constexpr const char* kCheckpointMagic = "kohn-checkpoint v1";

}  // namespace

std::string Checkpoint::key(int n, long k) {
  return hex(fnv1a("search;n=" + std::to_string(n) + ";k=" + std::to_string(k) + ";format=1"));
}

std::filesystem::path Checkpoint::path(const std::filesystem::path& dir, int n, long k) {
  return dir / ("n" + std::to_string(n) + "_k" + std::to_string(k) + "_" + key(n, k) + ".ckpt");
}

void Checkpoint::write(const std::filesystem::path& dir, int n, long k,
                       const std::vector<search::IsospectralFamily>& families) {
  std::filesystem::create_directories(dir);
  const std::string payload = io::families_to_jsonl(families);
  const auto final_path = path(dir, n, k);
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << kCheckpointMagic << ' ' << key(n, k) << ' ' << hex(fnv1a(payload)) << '\n' << payload;
    if (!f) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

std::optional<std::vector<search::IsospectralFamily>> Checkpoint::read(const std::filesystem::path& dir, int n,
                                                                         long k) {
  std::ifstream f(path(dir, n, k), std::ios::binary);
  if (!f) return std::nullopt;
  std::string header;
  if (!std::getline(f, header)) return std::nullopt;
  std::stringstream rest;
  rest << f.rdbuf();
  const std::string payload = rest.str();
  if (header != std::string(kCheckpointMagic) + ' ' + key(n, k) + ' ' + hex(fnv1a(payload))) return std::nullopt;
  try {
    auto families = io::families_from_jsonl(payload);
    for (const auto& fam : families)
      if (fam.n != n || fam.k != k) return std::nullopt;
    return families;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

namespace {

// Destination for command output: the given file, or `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::trunc);
    if (!file_) throw std::invalid_argument("cannot open output file " + path);
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

json cr_witness_json(const std::optional<lens::CrWitness>& w) {
  if (!w) return nullptr;
  return {{"c", w->c}, {"sigma", w->sigma}};
}

json isometry_witness_json(const std::optional<lens::IsometryWitness>& w) {
  if (!w) return nullptr;
  return {{"c", w->c}, {"sigma", w->sigma}, {"signs", w->signs}};
}

json comparison_json(const genfun::FComparison& c) {
  json j{{"verdict", genfun::to_string(c.verdict)}, {"equal", c.equal()}, {"reason", c.reason}};
  j["bound"] = c.bound >= 0 ? json(c.bound) : json(nullptr);
  j["almost_conjugate"] = c.almost_conjugate ? json(*c.almost_conjugate) : json(nullptr);
  j["first_difference"] =
      c.first_difference ? json::array({c.first_difference->first, c.first_difference->second}) : json(nullptr);
  return j;
}

struct Options {
  std::string out;
  std::string format;
  std::optional<int> workers;
  std::optional<int> cutoff;
  bool resume = false;
  std::string checkpoint_dir;
};

int cmd_dims(const std::string& literal, int pmax, int qmax, const Options& o, std::ostream& out) {
  if (pmax < 0 || qmax < 0) throw std::invalid_argument("pmax and qmax must be nonnegative");
  const auto G = parse_quotient(literal);
  const auto T = harmonic::dim_table(G, pmax, qmax);
  Sink sink(o.out, out);
  if (o.format.empty() || o.format == "csv")
    *sink << io::dim_table_to_csv(T);
  else if (o.format == "json")
    *sink << io::dim_table_to_json(T).dump(2) << '\n';
  else
    throw std::invalid_argument("dims supports --format csv or json");
  return kOk;
}

int cmd_search(int n, const std::string& range, const Options& o, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = parse_range(range);
  if (n < 2) throw std::invalid_argument("search needs n >= 2");
  if (lo < 2) throw std::invalid_argument("search needs k >= 2");
  const std::string format = o.format.empty() ? "jsonl" : o.format;
  if (format != "jsonl" && format != "csv" && format != "json")
    throw std::invalid_argument("search supports --format jsonl, json or csv");
  const int workers = resolve_workers(o.workers);

  std::filesystem::path ckdir = o.checkpoint_dir;
  if (ckdir.empty() && !o.out.empty()) ckdir = o.out + ".ckpt";
  if (o.resume && ckdir.empty()) throw std::invalid_argument("--resume needs --out or --checkpoint-dir");

  Sink sink(o.out, out);
  json all = json::array();
  if (format == "csv") *sink << io::families_csv_header();
  for (long k = lo; k <= hi; ++k) {
    std::optional<std::vector<search::IsospectralFamily>> families;
    if (o.resume) families = Checkpoint::read(ckdir, n, k);
    if (!families) {
      families = search::search_isospectral(n, k, {workers, true});
      if (!ckdir.empty()) Checkpoint::write(ckdir, n, k, *families);
    }
    if (format == "jsonl")
      *sink << io::families_to_jsonl(*families);
    else if (format == "csv")
      *sink << io::families_to_csv_rows(*families);
    else
      for (const auto& f : *families) all.push_back(io::family_to_json(f));
    (*sink).flush();
    if (!*sink) throw std::runtime_error("write to output failed");
  }
  if (format == "json") *sink << all.dump(2) << '\n';
  (void)err;
  return kOk;
}

int cmd_check(const std::string& a_text, const std::string& b_text, const std::string& mode, const Options& o,
              std::ostream& out) {
  if (mode != "cr" && mode != "riem" && mode != "kohn-F" && mode != "berger")
    throw std::invalid_argument("--mode must be cr, riem, kohn-F or berger");
  const auto A = parse_quotient(a_text);
  const auto B = parse_quotient(b_text);
  if (harmonic::ambient_dimension(A) != harmonic::ambient_dimension(B))
    throw std::invalid_argument("the two quotients have different dimensions");

  json j{{"a", harmonic::describe(A)}, {"b", harmonic::describe(B)}, {"mode", mode}};
  const auto* La = std::get_if<lens::LensSpace>(&A);
  const auto* Lb = std::get_if<lens::LensSpace>(&B);
  if ((mode == "cr" || mode == "riem") && !(La && Lb))
    throw std::invalid_argument("modes cr and riem compare lens spaces only");

  bool verdict = false;
  if (La && Lb) {
    auto cw = lens::cr_equivalence_witness(*La, *Lb);
    auto iw = lens::isometry_witness(*La, *Lb);
    j["cr_equivalent"] = cw.has_value();
    j["cr_witness"] = cr_witness_json(cw);
    j["isometric"] = iw.has_value();
    j["isometry_witness"] = isometry_witness_json(iw);
    if (mode == "cr") verdict = cw.has_value();
    if (mode == "riem") verdict = iw.has_value();
  } else {
    j["cr_equivalent"] = nullptr;
    j["isometric"] = nullptr;
  }

  const std::optional<int> bound = mode == "kohn-F" ? o.cutoff : std::nullopt;
  const auto cmp = genfun::f_equal(A, B, bound);
  j["f_equal"] = comparison_json(cmp);
  if (mode == "kohn-F") verdict = cmp.equal();

  const int D = mode == "berger" ? o.cutoff.value_or(30) : 30;
  const bool berger_equal = berger::berger_isospectral_upto(A, B, D);
  j["berger_equal"] = berger_equal;
  j["berger_cutoff"] = D;
  if (mode == "berger") verdict = berger_equal;

  j["verdict"] = verdict;
  Sink sink(o.out, out);
  *sink << j.dump(2) << '\n';
  return verdict ? kOk : kVerificationFailed;
}

int cmd_family_gerson(long k, const Options& o, std::ostream& out) {
  const long expected = families::gerson_class_count(k);
  const auto census = families::gerson_census(static_cast<int>(k - 3), k);
  const bool iso = families::verify_gerson_isospectral(k);
  json classes = json::array();
  for (const auto& L : census.classes) classes.push_back(lens::format_lens(L));
  json j{{"k", k},
         {"n", k - 3},
         {"classes", classes},
         {"class_count", census.classes.size()},
         {"expected_class_count", expected},
         {"weight_sets", census.weight_sets},
         {"ordered_members", to_decimal(census.ordered_members)},
         {"isospectral", iso}};
  Sink sink(o.out, out);
  *sink << j.dump(2) << '\n';
  const bool ok = iso && static_cast<long>(census.classes.size()) == expected;
  return ok ? kOk : kVerificationFailed;
}

int cmd_family_pair(long r, const std::vector<long>& a, const Options& o, std::ostream& out) {
  const auto params = families::PairParams::make(r, a);
  const auto [plus, minus] = families::make_pair(params);
  const bool f_eq = genfun::p_poly_direct(plus) == genfun::p_poly_direct(minus);
  const bool equivalent = lens::are_cr_equivalent(plus, minus);
  const bool criterion = families::pair_equivalent(params);
  json j{{"r", r},
         {"a", a},
         {"k", params.k()},
         {"L+", lens::format_lens(plus)},
         {"L-", lens::format_lens(minus)},
         {"canonical+", lens::format_lens(lens::cr_canonical_form(plus))},
         {"canonical-", lens::format_lens(lens::cr_canonical_form(minus))},
         {"f_equal", f_eq},
         {"cr_equivalent", equivalent},
         {"criterion_equivalent", criterion},
         {"criterion_agrees", criterion == equivalent}};
  Sink sink(o.out, out);
  *sink << j.dump(2) << '\n';
  return f_eq && criterion == equivalent ? kOk : kVerificationFailed;
}

int cmd_berger(const std::string& literal, const Options& o, std::ostream& out) {
  const auto G = parse_quotient(literal);
  const auto lines = berger::berger_spectrum(G, o.cutoff.value_or(30));
  Sink sink(o.out, out);
  if (o.format.empty() || o.format == "csv")
    *sink << io::berger_to_csv(lines);
  else if (o.format == "json")
    *sink << io::berger_to_json(lines).dump(2) << '\n';
  else
    throw std::invalid_argument("berger supports --format csv or json");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kohn Laplacian spectra of elliptic CR manifolds"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "csv | json | jsonl");
  };

  std::string literal, literal_b, range, mode = "kohn-F", kind;
  int pmax = 0, qmax = 0, n = 0;
  std::vector<long> family_args;

  auto* dims = app.add_subcommand("dims", "Table of dim H^Gamma_{p,q}");
  dims->add_option("quotient", literal, "L(k; s...) or GammaI(m,n,r;k,l)")->required();
  dims->add_option("pmax", pmax)->required();
  dims->add_option("qmax", qmax)->required();
  add_common(dims);

  auto* srch = app.add_subcommand("search", "Families of CR isospectral lens spaces");
  srch->add_option("n", n, "Complex dimension")->required();
  srch->add_option("k", range, "Order or range a..b")->required();
  srch->add_option("--workers", o.workers, "Worker threads (overrides KOHN_WORKERS)");
  srch->add_flag("--resume", o.resume, "Reuse valid checkpoints");
  srch->add_option("--checkpoint-dir", o.checkpoint_dir, "Checkpoint directory (default: <out>.ckpt)");
  add_common(srch);

  auto* check = app.add_subcommand("check-pair", "Compare two quotients");
  check->add_option("a", literal)->required();
  check->add_option("b", literal_b)->required();
  check->add_option("--mode", mode, "cr | riem | kohn-F | berger")->capture_default_str();
  check->add_option("--cutoff", o.cutoff, "Berger degree cutoff, or table bound for kohn-F");
  add_common(check);

  auto* fam = app.add_subcommand("family", "Explicit isospectral families");
  fam->add_option("kind", kind, "gerson | pair")->required();
  fam->add_option("params", family_args, "gerson: k; pair: r a_1 ... a_n")->required();
  add_common(fam);

  auto* ber = app.add_subcommand("berger", "Formal Berger-metric spectrum");
  ber->add_option("quotient", literal)->required();
  ber->add_option("--cutoff", o.cutoff, "Degree cutoff D (default 30)");
  add_common(ber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*dims) return cmd_dims(literal, pmax, qmax, o, out);
    if (*srch) return cmd_search(n, range, o, out, err);
    if (*check) return cmd_check(literal, literal_b, mode, o, out);
    if (*ber) return cmd_berger(literal, o, out);
    if (*fam) {
      if (kind == "gerson") {
        if (family_args.size() != 1) throw std::invalid_argument("family gerson takes exactly one k");
        return cmd_family_gerson(family_args[0], o, out);
      }
      if (kind == "pair") {
        if (family_args.size() < 2) throw std::invalid_argument("family pair takes r followed by a_1 ... a_n");
        return cmd_family_pair(family_args[0], {family_args.begin() + 1, family_args.end()}, o, out);
      }
      throw std::invalid_argument("family kind must be gerson or pair");
    }
  } catch (const ArithmeticError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace kohn::cli
