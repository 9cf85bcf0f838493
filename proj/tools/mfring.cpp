#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iostream>
#include <thread>

#include "mfring/integrality.hpp"
#include "mfring/presentation.hpp"
#include "mfring/report.hpp"

using nlohmann::ordered_json;
using namespace mfring;

namespace {

std::vector<int> pick_levels(int level) {
  if (level == 0) return supported_levels();
  return {level};
}

CheckReport relations_report(int level, int margin) {
  CheckReport rep;
  rep.command = "verify relations";
  for (int N : pick_levels(level)) {
    Evaluator ev;
    for (const auto& rel : relation_catalog(N)) {
      auto out = verify_vanishing(rel, margin, ev);
      rep.items.push_back({out.name + (N != rel.level ? " [in level " + std::to_string(N) + "]" : ""),
                           rel.level, rel.weight, out.pass,
                           "cut " + std::to_string(out.cut) + ", " + out.detail});
    }
  }
  return rep;
}

CheckReport identities_report(int level, int margin) {
  CheckReport rep;
  rep.command = "verify identities";
  for (const auto& id : identity_catalog()) {
    if (level != 0 && id.level != level) continue;
    auto out = verify_identity(id, margin);
    rep.items.push_back({out.name, out.level, out.weight, out.pass,
                         "cut " + std::to_string(out.cut) + ", " + out.detail});
  }
  for (const auto& id : polynomial_identity_catalog()) {
    if (level != 0 && id.level != level) continue;
    auto out = verify_polynomial_identity(id);
    rep.items.push_back({out.name, out.level, out.weight, out.pass, out.detail});
  }
  return rep;
}

CheckReport presentation_report(int level, int max_weight) {
  CheckReport rep;
  rep.command = "verify presentation";
  for (int N : pick_levels(level)) {
    Evaluator ev;
    auto r = verify_presentation(presentation(N), max_weight, ev);
    for (const auto& row : r.rows)
      rep.items.push_back({"presentation N=" + std::to_string(N) + " k=" + std::to_string(row.weight),
                           N, row.weight, row.pass, row.detail});
  }
  return rep;
}

CheckReport integrality_report(int level, int max_weight, int prec) {
  CheckReport rep;
  rep.command = "verify integrality";
  for (int N : pick_levels(level)) {
    Evaluator ev;
    for (auto& item : verify_integral_basis(N, max_weight, prec, ev))
      rep.items.push_back({item.name, item.level, item.weight, item.pass, item.detail});
  }
  for (int N : {4, 5, 7, 9, 16, 25}) {
    if (level != 0 && N != level) continue;
    for (auto& item : verify_closed_forms(N, prec))
      rep.items.push_back({item.name, item.level, item.weight, item.pass, item.detail});
  }
  return rep;
}

CheckReport hilbert_report(int level, int order) {
  CheckReport rep;
  rep.command = "verify hilbert";
  if (level == 0)
    for (auto& c : hilbert_suite(order)) rep.items.push_back({c.name, 0, 0, c.pass, c.detail});
  for (int N : pick_levels(level)) {
    auto h = complement_hilbert(presentation(N));
    auto c = verify_hilbert_identity("H(" + h.str() + ") = H(M(" + std::to_string(N) + "))", h,
                                     dim_series(N, order));
    rep.items.push_back({c.name, N, 0, c.pass, c.detail});
  }
  return rep;
}

CheckReport all_report(int threads) {
  CheckReport rep;
  rep.command = "verify all";
  const auto& levels = supported_levels();
  std::vector<CheckReport> pres(levels.size()), integ(levels.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= 2 * levels.size()) break;
      if (i < levels.size())
        pres[i] = presentation_report(levels[i], 24);
      else
        integ[i - levels.size()] = integrality_report(levels[i - levels.size()], 24, 200);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // assembly order is fixed regardless of completion order
  std::vector<CheckReport> parts;
  parts.push_back(relations_report(0, 10));
  parts.push_back(identities_report(0, 10));
  for (auto& r : pres) parts.push_back(std::move(r));
  for (auto& r : integ) parts.push_back(std::move(r));
  parts.push_back(hilbert_report(0, 200));
  for (auto& p : parts)
    for (auto& item : p.items) rep.items.push_back(std::move(item));
  return rep;
}

int emit(const CheckReport& rep, bool json) {
  if (json) {
    ordered_json j;
    j["command"] = rep.command;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : rep.parameters) params[k] = v;
    j["parameters"] = params;
    j["items"] = ordered_json::array();
    for (const auto& item : rep.items)
      j["items"].push_back(ordered_json{{"name", item.name},
                                        {"level", item.level},
                                        {"weight", item.weight},
                                        {"pass", item.pass},
                                        {"detail", item.detail}});
    j["pass"] = rep.pass();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& item : rep.items) {
      std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.name;
      if (item.level) std::cout << " (N=" << item.level << ", k=" << item.weight << ")";
      if (!item.detail.empty()) std::cout << ": " << item.detail;
      std::cout << "\n";
    }
    std::cout << rep.command << ": " << rep.items.size() << " checks, "
              << (rep.pass() ? "all passed" : "FAILURES present") << "\n";
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-expansion and graded-ring verification for modular forms of level "
               "N in {1,...,10,12,16,18,25}"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable report");

  // expand
  auto* cmd_expand = app.add_subcommand("expand", "print the q-expansion of a catalogue form");
  std::string form;
  int prec = 50, level = 0;
  cmd_expand->add_option("--form", form, "catalogue name, e.g. E4, C3, beta5^(2)")->required();
  cmd_expand->add_option("--prec", prec, "number of coefficients")->capture_default_str();
  cmd_expand->add_option("--level", level, "expected level (cross-checked)");

  // dim
  auto* cmd_dim = app.add_subcommand("dim", "dimension of M_k(N)");
  int dim_level = 1, dim_weight = 0;
  cmd_dim->add_option("--level", dim_level)->required();
  cmd_dim->add_option("--weight", dim_weight)->required();

  // basis
  auto* cmd_basis = app.add_subcommand("basis", "echelon basis of M_k(N)");
  int basis_level = 1, basis_weight = 0, basis_prec = 0;
  cmd_basis->add_option("--level", basis_level)->required();
  cmd_basis->add_option("--weight", basis_weight)->required();
  cmd_basis->add_option("--prec", basis_prec, "expansion precision (default dim+8)");

  // hilbert
  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert series of M(N) vs its presentation");
  int hil_level = 1, hil_order = 200;
  cmd_hilbert->add_option("--level", hil_level)->required();
  cmd_hilbert->add_option("--order", hil_order, "expansion order")->capture_default_str();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->require_subcommand(1);
  int v_level = 0, v_margin = 10, v_maxw = 24, v_prec = 200, v_order = 200, v_threads = 1;
  auto* v_rel = cmd_verify->add_subcommand("relations", "all O_* forms vanish");
  auto* v_id = cmd_verify->add_subcommand("identities", "cross-level identities hold");
  auto* v_pres = cmd_verify->add_subcommand("presentation", "ring presentations degreewise");
  auto* v_int = cmd_verify->add_subcommand("integrality", "integral bases and closed forms");
  auto* v_hil = cmd_verify->add_subcommand("hilbert", "Hilbert-function identities");
  auto* v_all = cmd_verify->add_subcommand("all", "the full verification battery");
  for (auto* c : {v_rel, v_id, v_pres, v_int, v_hil})
    c->add_option("--level", v_level, "restrict to one level (default: all)");
  for (auto* c : {v_rel, v_id}) c->add_option("--margin", v_margin, "orders beyond the cut")->capture_default_str();
  for (auto* c : {v_pres, v_int}) c->add_option("--max-weight", v_maxw, "largest even weight")->capture_default_str();
  v_int->add_option("--prec", v_prec, "expansion precision")->capture_default_str();
  v_hil->add_option("--order", v_order, "t-expansion order")->capture_default_str();
  v_all->add_option("--threads", v_threads, "parallel level tasks")->capture_default_str();
  for (auto* c : {cmd_expand, cmd_dim, cmd_basis, cmd_hilbert, cmd_verify, v_rel, v_id,
                  v_pres, v_int, v_hil, v_all})
    c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_expand) {
      const auto& cat = Catalog::standard();
      auto d = cat.descriptor(form);
      if (level != 0 && level != d.level) {
        std::cerr << "form " << form << " has level " << d.level << ", not " << level << "\n";
        return 2;
      }
      QExpansion q = cat.resolve(form, prec);
      if (json) {
        ordered_json j;
        j["command"] = "expand";
        j["form"] = form;
        j["level"] = d.level;
        j["weight"] = d.weight;
        j["precision"] = q.precision();
        j["coefficients"] = ordered_json::array();
        for (const auto& c : q.coeffs()) j["coefficients"].push_back(rat_str(c));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << form << " (level " << d.level << ", weight " << d.weight << ")\n"
                  << q.str() << "\n";
      }
      return 0;
    }
    if (*cmd_dim) {
      int d = dim_space({dim_level, dim_weight});
      if (json) {
        ordered_json j{{"command", "dim"}, {"level", dim_level}, {"weight", dim_weight}, {"dim", d}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << d << "\n";
      }
      return 0;
    }
    if (*cmd_basis) {
      int d = dim_space({basis_level, basis_weight});
      int p = basis_prec > d ? basis_prec : d + 8;
      auto basis = space_basis({basis_level, basis_weight}, p);
      auto rep = verify_echelon({basis_level, basis_weight});
      if (json) {
        ordered_json j;
        j["command"] = "basis";
        j["level"] = basis_level;
        j["weight"] = basis_weight;
        j["dim"] = d;
        j["elements"] = ordered_json::array();
        for (const auto& b : basis)
          j["elements"].push_back(ordered_json{{"monomial", b.monomial.str()},
                                               {"valuation", b.expected_valuation},
                                               {"expansion", b.expansion.str()}});
        j["echelon"] = rep.pass;
        j["detail"] = rep.detail;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "dim M_" << basis_weight << "(" << basis_level << ") = " << d << "\n";
        for (const auto& b : basis)
          std::cout << "  q^" << b.expected_valuation << ": " << b.monomial.str() << " = "
                    << b.expansion.str() << "\n";
        std::cout << "echelon: " << (rep.pass ? "pass" : "FAIL") << " (" << rep.detail << ")\n";
      }
      return rep.pass ? 0 : 1;
    }
    if (*cmd_hilbert) {
      auto h = complement_hilbert(presentation(hil_level));
      auto lhs = expand(h, hil_order);
      auto rhs = dim_series(hil_level, hil_order);
      bool same = lhs == rhs;
      if (json) {
        ordered_json j;
        j["command"] = "hilbert";
        j["level"] = hil_level;
        j["series"] = h.str();
        j["expansion"] = lhs;
        j["dim_series"] = rhs;
        j["pass"] = same;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "H = " << h.str() << "\n";
        std::cout << "coefficients (even k up to " << std::min(hil_order, 24) << "):";
        for (int k = 0; k <= std::min(hil_order, 24); k += 2) std::cout << " " << lhs[static_cast<size_t>(k)];
        std::cout << "\ndim M_k:                        ";
        for (int k = 0; k <= std::min(hil_order, 24); k += 2) std::cout << " " << rhs[static_cast<size_t>(k)];
        std::cout << "\n" << (same ? "equal" : "DIFFER") << " through t^" << hil_order << "\n";
      }
      return same ? 0 : 1;
    }
    if (*cmd_verify) {
      CheckReport rep;
      if (*v_rel) rep = relations_report(v_level, v_margin);
      else if (*v_id) rep = identities_report(v_level, v_margin);
      else if (*v_pres) rep = presentation_report(v_level, v_maxw);
      else if (*v_int) rep = integrality_report(v_level, v_maxw, v_prec);
      else if (*v_hil) rep = hilbert_report(v_level, v_order);
      else rep = all_report(v_threads);
      if (v_level) rep.parameters.emplace_back("level", std::to_string(v_level));
      return emit(rep, json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
