// Command-line front end: verification sweeps and enumerations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "endo/endo.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Output {
  std::string format = "json";
  std::string file;

  int emit(const std::string& text) const {
    if (file.empty()) {
      std::cout << text;
      return kExitPass;
    }
    std::ofstream os(file);
    if (!os) {
      std::cerr << "cannot open " << file << " for writing\n";
      return kExitUsage;
    }
    os << text;
    return kExitPass;
  }
};

std::string render_reports(const std::vector<endo::VerificationReport>& reports, const Output& out) {
  if (out.format == "csv") return endo::to_csv(reports);
  if (reports.size() == 1) return endo::to_json_value(reports.front()).dump(2) + "\n";
  json arr = json::array();
  bool all = true;
  for (auto& r : reports) {
    arr.push_back(endo::to_json_value(r));
    all = all && r.pass();
  }
  return json{{"reports", arr}, {"pass", all}}.dump(2) + "\n";
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

struct VerifyFlags {
  int rmax = -1;
  int max_rr = 6;
  std::vector<long> q;
  int t2max = 2;
  int rrmax = 4;
  int nmax = -1;
};

endo::VerificationReport run_suite(const std::string& name, const VerifyFlags& f) {
  auto qs = [&](std::vector<long> d) { return f.q.empty() ? d : f.q; };
  auto or_default = [](int v, int d) { return v < 0 ? d : v; };
  if (name == "annexe") return endo::verify_annexe(or_default(f.rmax, 30));
  if (name == "split") return endo::verify_split(or_default(f.rmax, 30), or_default(f.nmax, 10));
  if (name == "lemma25") return endo::verify_lemma25(f.max_rr);
  if (name == "counting") return endo::verify_counting(qs({5, 7, 13}), f.t2max);
  if (name == "const28") return endo::verify_const28(qs({5, 7, 13}), or_default(f.rmax, 6));
  if (name == "c1") return endo::verify_c1(or_default(f.rmax, 8));
  if (name == "lemma26") return endo::verify_lemma26(qs({5, 7}), f.rrmax);
  if (name == "weyl") return endo::verify_weyl(or_default(f.nmax, 4));
  if (name == "descent") return endo::verify_descent(or_default(f.nmax, 4));
  if (name == "params") return endo::verify_params(or_default(f.nmax, 4));
  throw endo::invalid_argument("unknown suite '" + name + "'");
}

const std::vector<std::string> kSuites = {"annexe", "split",  "lemma25", "counting", "const28",
                                          "c1",     "lemma26", "weyl",   "descent",  "params"};

std::string enumerate_params(int n, const Output& out) {
  auto params = endo::enumerate_unip_quad(n);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "kind,lam_plus,lam_minus,eps_plus,eps_minus\n";
    for (auto& p : params)
      os << "parameter," << csv_cell(json(p.lam_plus).dump()) << ',' << csv_cell(json(p.lam_minus).dump()) << ','
         << csv_cell(endo::eps_json(p.eps_plus).dump()) << ',' << csv_cell(endo::eps_json(p.eps_minus).dump())
         << '\n';
    return os.str();
  }
  json sym = json::array();
  for (auto& lam : endo::enumerate_symplectic(2 * n)) {
    auto jb = lam.even_distinct();
    sym.push_back({{"lambda", lam}, {"jord_bp", jb}, {"component_group_order", 1L << jb.size()}});
  }
  json pj = json::array();
  for (auto& p : params)
    pj.push_back({{"lam_plus", p.lam_plus},
                  {"lam_minus", p.lam_minus},
                  {"eps_plus", endo::eps_json(p.eps_plus)},
                  {"eps_minus", endo::eps_json(p.eps_minus)}});
  json dn = json::array();
  json triples = json::array();
  for (auto [n1, n2] : endo::d_of_n(n)) {
    dn.push_back({n1, n2});
    for (int a1 = n1; a1 >= 0; --a1)
      for (auto& l1p : endo::enumerate_symplectic(2 * a1))
        for (auto& l1m : endo::enumerate_symplectic(2 * (n1 - a1)))
          for (int a2 = n2; a2 >= 0; --a2)
            for (auto& l2p : endo::enumerate_symplectic(2 * a2))
              for (auto& l2m : endo::enumerate_symplectic(2 * (n2 - a2))) {
                endo::UnipQuadParam t1{l1p, l1m, {}, {}, n1}, t2{l2p, l2m, {}, {}, n2};
                auto t = endo::assemble_triple(t1, t2, {n1, n2});
                triples.push_back({{"pair", {n1, n2}},
                                   {"lambda", t.lambda},
                                   {"s", {{"plus", t.s.part_plus}, {"minus", t.s.part_minus}}},
                                   {"h", {{"plus", t.h.part_plus}, {"minus", t.h.part_minus}}},
                                   {"pi", endo::to_json_value(endo::pi_virtual(t))}});
              }
  }
  return json{{"n", n},
              {"symplectic_partitions", sym},
              {"parameters", pj},
              {"D", dn},
              {"triples", triples}}
             .dump(2) +
         "\n";
}

std::string enumerate_descent_data(int n, const Output& out) {
  auto data = endo::enumerate_descent(n);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "n,n_plus,eta_plus,n_minus,eta_minus,blocks\n";
    for (auto& dd : data) {
      json bl = json(dd).at("blocks");
      os << dd.n << ',' << dd.n_plus << ',' << dd.eta_plus.name() << ',' << dd.n_minus << ','
         << dd.eta_minus.name() << ',' << csv_cell(bl.dump()) << '\n';
    }
    return os.str();
  }
  json arr = json::array();
  for (auto& dd : data) arr.push_back(dd);
  return json{{"n", n}, {"descent_data", arr}}.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of endoscopic sign and counting identities"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.file, "Write output to FILE instead of standard output");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep")->fallthrough();
  std::string suite;
  verify->add_option("suite", suite, "Suite name, or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        auto v = kSuites;
        v.push_back("all");
        return v;
      }()));
  verify->add_option("--rmax", vf.rmax, "Bound on r' and |r''|");
  verify->add_option("--max-rr", vf.max_rr, "Bound on R-r for the kappa sum");
  verify->add_option("--q", vf.q, "Residue field sizes")->delimiter(',');
  verify->add_option("--t2max", vf.t2max, "Bound on t2 for the counting sweep");
  verify->add_option("--rrmax", vf.rrmax, "Bound on R-r for the factorization sweep");
  verify->add_option("--nmax", vf.nmax, "Bound on N (weyl, descent, params) or on N', N'' (split)");

  int en = 0;
  std::string what;
  auto* enumerate = app.add_subcommand("enumerate", "List parameters or descent data")->fallthrough();
  enumerate->add_option("kind", what, "params or descent")->required()->check(CLI::IsMember({"params", "descent"}));
  enumerate->add_option("--n", en, "Ambient rank n")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      std::vector<std::string> names = suite == "all" ? kSuites : std::vector<std::string>{suite};
      std::vector<endo::VerificationReport> reports;
      int code = kExitPass;
      for (auto& nm : names) {
        try {
          reports.push_back(run_suite(nm, vf));
        } catch (const endo::resource_limit& e) {
          endo::VerificationReport r{nm};
          r.incomplete = true;
          r.notes["error"] = e.what();
          reports.push_back(r);
          code = kExitResource;
        }
        if (code == kExitPass && !reports.back().pass()) code = kExitFail;
      }
      int wc = out.emit(render_reports(reports, out));
      return wc != kExitPass ? wc : code;
    }
    std::string text = what == "params" ? enumerate_params(en, out) : enumerate_descent_data(en, out);
    return out.emit(text);
  } catch (const endo::resource_limit& e) {
    std::cerr << "incomplete: " << e.what() << '\n';
    std::cout << json{{"incomplete", true}, {"error", e.what()}}.dump(2) << '\n';
    return kExitResource;
  } catch (const endo::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
