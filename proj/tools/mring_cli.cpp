// Copyright 2026 The mring Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. All algebra goes through the shared-library C API;
// this translation unit only parses arguments and renders output.

#include <mring/mring.h>

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 parse error, 2 domain error.
struct CliFailure {
  int code;
};

[[noreturn]] void fail(mring_status status) {
  std::cerr << "error: " << mring_last_error() << "\n";
  throw CliFailure{status == MRING_ERR_PARSE ? 1 : 2};
}

void check(mring_status status) {
  if (status != MRING_OK) fail(status);
}

struct ElemDeleter {
  void operator()(mring_elem* e) const { mring_elem_free(e); }
};
using Elem = std::unique_ptr<mring_elem, ElemDeleter>;

struct CompletionDeleter {
  void operator()(mring_completion* c) const { mring_completion_free(c); }
};
using Completion = std::unique_ptr<mring_completion, CompletionDeleter>;

Elem parse_elem(const std::string& text) {
  mring_elem* out = nullptr;
  check(mring_elem_parse(text.c_str(), &out));
  return Elem(out);
}

std::string take(char* s) {
  if (!s) fail(MRING_ERR_INVALID);
  std::string out(s);
  mring_string_free(s);
  return out;
}

void print_vector(const std::string& name, const std::string& json_text, bool as_json) {
  if (as_json) {
    std::cout << json_text << "\n";
    return;
  }
  const json arr = json::parse(json_text);
  std::cout << name << " = [";
  for (std::size_t i = 0; i < arr.size(); ++i)
    std::cout << (i ? ", " : "") << arr[i].get<std::string>();
  std::cout << "]\n";
}

void print_elem(const Elem& e, bool as_json) {
  if (as_json)
    std::cout << take(mring_elem_to_json(e.get())) << "\n";
  else
    std::cout << take(mring_elem_format(e.get())) << "\n";
}

struct CommonOpts {
  unsigned long level = 16;
  bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_level = true) {
  if (with_level)
    cmd->add_option("--level,-l", opts.level, "truncation level")
        ->envname("MRING_LEVEL")
        ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", opts.as_json, "bit-stable JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in the ring of monic-polynomial ratios"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mring_version()));

  // ghost
  auto ghost_opts = std::make_shared<CommonOpts>();
  auto ghost_expr = std::make_shared<std::string>();
  CLI::App* ghost = app.add_subcommand("ghost", "power-sum coordinates t_0..t_level");
  add_common(ghost, *ghost_opts);
  ghost->add_option("expr", *ghost_expr, "element expression")->required();
  ghost->callback([ghost_opts, ghost_expr] {
    const Elem e = parse_elem(*ghost_expr);
    char* out = nullptr;
    check(mring_ghost_json(e.get(), ghost_opts->level, &out));
    print_vector("t", take(out), ghost_opts->as_json);
  });

  // necklace
  auto neck_opts = std::make_shared<CommonOpts>();
  auto neck_expr = std::make_shared<std::string>();
  CLI::App* necklace = app.add_subcommand("necklace", "necklace coefficients c_1..c_level");
  add_common(necklace, *neck_opts);
  necklace->add_option("expr", *neck_expr, "element expression")->required();
  necklace->callback([neck_opts, neck_expr] {
    const Elem e = parse_elem(*neck_expr);
    char* out = nullptr;
    check(mring_necklace_json(e.get(), neck_opts->level, &out));
    print_vector("c", take(out), neck_opts->as_json);
  });

  // decompose
  auto dec_opts = std::make_shared<CommonOpts>();
  auto dec_expr = std::make_shared<std::string>();
  CLI::App* decompose =
      app.add_subcommand("decompose", "write a member of the cyclotomic subring in the "
                                      "c0[x] + sum c_n[1-x^-n] basis");
  add_common(decompose, *dec_opts, /*with_level=*/false);
  decompose->add_option("expr", *dec_expr, "element expression")->required();
  decompose->callback([dec_opts, dec_expr] {
    const Elem e = parse_elem(*dec_expr);
    mring_completion* ce = nullptr;
    check(mring_decompose(e.get(), &ce));
    const Completion owned(ce);
    const std::string text = take(mring_completion_to_json(ce));
    if (dec_opts->as_json) {
      std::cout << text << "\n";
      return;
    }
    const json j = json::parse(text);
    std::cout << "c0 = " << j["c0"].get<long long>() << ", c = {";
    bool first = true;
    for (const auto& [key, value] : j["c"].items()) {
      std::cout << (first ? "" : ", ") << key << ": " << value.get<long long>();
      first = false;
    }
    std::cout << "}\n";
  });

  // member
  auto mem_opts = std::make_shared<CommonOpts>();
  auto mem_expr = std::make_shared<std::string>();
  CLI::App* member =
      app.add_subcommand("member", "roots all of modulus 0 or 1 (Kronecker test)");
  add_common(member, *mem_opts, /*with_level=*/false);
  member->add_option("expr", *mem_expr, "element expression")->required();
  member->callback([mem_opts, mem_expr] {
    const Elem e = parse_elem(*mem_expr);
    int is_member = 0;
    check(mring_phi_member(e.get(), &is_member));
    std::cout << (is_member ? "true" : "false") << "\n";
  });

  // add / mul
  for (const bool is_mul : {false, true}) {
    auto opts = std::make_shared<CommonOpts>();
    auto lhs = std::make_shared<std::string>();
    auto rhs = std::make_shared<std::string>();
    CLI::App* cmd = app.add_subcommand(is_mul ? "mul" : "add",
                                       is_mul ? "ring product of two elements"
                                              : "ring sum of two elements");
    add_common(cmd, *opts, /*with_level=*/false);
    cmd->add_option("lhs", *lhs, "left operand")->required();
    cmd->add_option("rhs", *rhs, "right operand")->required();
    cmd->callback([opts, lhs, rhs, is_mul] {
      const Elem a = parse_elem(*lhs);
      const Elem b = parse_elem(*rhs);
      mring_elem* out = nullptr;
      check(is_mul ? mring_elem_mul(a.get(), b.get(), &out)
                   : mring_elem_add(a.get(), b.get(), &out));
      print_elem(Elem(out), opts->as_json);
    });
  }

  // adams
  auto adams_opts = std::make_shared<CommonOpts>();
  auto adams_n = std::make_shared<unsigned long>(1);
  auto adams_expr = std::make_shared<std::string>();
  CLI::App* adams = app.add_subcommand("adams", "raise every root to the n-th power");
  add_common(adams, *adams_opts, /*with_level=*/false);
  adams->add_option("n", *adams_n, "power")->required();
  adams->add_option("expr", *adams_expr, "element expression")->required();
  adams->callback([adams_opts, adams_n, adams_expr] {
    const Elem e = parse_elem(*adams_expr);
    mring_elem* out = nullptr;
    check(mring_elem_adams(e.get(), *adams_n, &out));
    print_elem(Elem(out), adams_opts->as_json);
  });

  // endo-apply
  auto apply_opts = std::make_shared<CommonOpts>();
  auto apply_endo = std::make_shared<std::string>();
  auto apply_expr = std::make_shared<std::string>();
  CLI::App* endo_apply = app.add_subcommand("endo-apply", "apply an endomorphism");
  add_common(endo_apply, *apply_opts, /*with_level=*/false);
  endo_apply->add_option("--endo", *apply_endo, "endomorphism JSON")->required();
  endo_apply->add_option("expr", *apply_expr, "element expression")->required();
  endo_apply->callback([apply_opts, apply_endo, apply_expr] {
    const Elem e = parse_elem(*apply_expr);
    mring_elem* out = nullptr;
    check(mring_endo_apply(apply_endo->c_str(), e.get(), &out));
    print_elem(Elem(out), apply_opts->as_json);
  });

  // endo-verify; sample expressions arrive as unmatched arguments so that
  // CLI11's bracket-array splitting never touches them.
  auto verify_opts = std::make_shared<CommonOpts>();
  auto verify_endo = std::make_shared<std::string>();
  CLI::App* endo_verify =
      app.add_subcommand("endo-verify", "check the ring-endomorphism laws on samples");
  add_common(endo_verify, *verify_opts);
  endo_verify->add_option("--endo", *verify_endo, "endomorphism JSON")->required();
  endo_verify->allow_extras();
  endo_verify->callback([endo_verify, verify_opts, verify_endo] {
    const std::vector<std::string> exprs = endo_verify->remaining();
    if (exprs.empty()) {
      std::cerr << "error: endo-verify needs at least one sample expression\n";
      throw CliFailure{1};
    }
    std::vector<Elem> owned;
    std::vector<const mring_elem*> raw;
    for (const std::string& text : exprs) {
      owned.push_back(parse_elem(text));
      raw.push_back(owned.back().get());
    }
    char* report = nullptr;
    check(mring_endo_verify(verify_endo->c_str(), raw.data(), raw.size(),
                            verify_opts->level, &report));
    const std::string text = take(report);
    if (verify_opts->as_json) {
      std::cout << text << "\n";
      return;
    }
    bool all = true;
    for (const auto& entry : json::parse(text)) {
      const bool pass = entry["pass"].get<bool>();
      all = all && pass;
      std::cout << entry["law"].get<std::string>() << ": " << (pass ? "pass" : "FAIL");
      if (!entry["witness"].is_null()) std::cout << "  witness num " << entry["witness"]["num"];
      std::cout << "\n";
    }
    std::cout << "all: " << (all ? "pass" : "FAIL") << "\n";
  });

  // cyclo-identity
  auto cyclo_opts = std::make_shared<CommonOpts>();
  auto cyclo_expr = std::make_shared<std::string>();
  CLI::App* cyclo = app.add_subcommand(
      "cyclo-identity", "check the reversed-coefficient product identity for [f]");
  add_common(cyclo, *cyclo_opts);
  cyclo->add_option("expr", *cyclo_expr, "polynomial element [f]")->required();
  cyclo->callback([cyclo_opts, cyclo_expr] {
    const Elem e = parse_elem(*cyclo_expr);
    int holds = 0;
    check(mring_cyclo_identity(e.get(), cyclo_opts->level, &holds));
    std::cout << (holds ? "true" : "false") << "\n";
  });

  // dirichlet
  auto dir_opts = std::make_shared<CommonOpts>();
  auto dir_qmax = std::make_shared<unsigned long>(10000);
  auto dir_angles = std::make_shared<std::vector<double>>();
  CLI::App* dirichlet =
      app.add_subcommand("dirichlet", "simultaneous-approximation shift for angle sets");
  add_common(dirichlet, *dir_opts, /*with_level=*/false);
  dirichlet->add_option("--q-max", *dir_qmax, "scan bound")->check(CLI::PositiveNumber);
  dirichlet->add_option("angles", *dir_angles, "angles in [0,1)")->required();
  dirichlet->callback([dir_opts, dir_qmax, dir_angles] {
    unsigned long q = 0;
    check(mring_dirichlet_shift(dir_angles->data(), dir_angles->size(), *dir_qmax, &q));
    if (dir_opts->as_json)
      std::cout << json{{"q", q}}.dump() << "\n";
    else
      std::cout << "q = " << q << "\n";
  });

  // demo
  auto demo_opts = std::make_shared<CommonOpts>();
  auto demo_k = std::make_shared<unsigned long>(100);
  auto demo_expr = std::make_shared<std::string>();
  CLI::App* demo =
      app.add_subcommand("demo", "ghost value-set size vs root-of-unity membership");
  add_common(demo, *demo_opts, /*with_level=*/false);
  demo->add_option("--k", *demo_k, "ghost indices to scan")->check(CLI::PositiveNumber);
  demo->add_option("expr", *demo_expr, "element expression")->required();
  demo->callback([demo_opts, demo_k, demo_expr] {
    const Elem e = parse_elem(*demo_expr);
    char* out = nullptr;
    check(mring_demo_json(e.get(), *demo_k, &out));
    const std::string text = take(out);
    if (demo_opts->as_json) {
      std::cout << text << "\n";
      return;
    }
    const json j = json::parse(text);
    std::cout << "values = " << j["values"].get<long long>()
              << ", member = " << (j["member"].get<bool>() ? "true" : "false")
              << ", consistent = " << (j["consistent"].get<bool>() ? "true" : "false")
              << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const CliFailure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
