// Copyright 2026 The jmobius Authors
//
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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jmobius/cli.hpp"

namespace {

void add_common(CLI::App* sub, jmobius::JobSpec& spec) {
  sub->add_option("--format", spec.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  jmobius::JobSpec spec;
  CLI::App app{"Incidence near-ring invariants of finite posets and matroids"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute mu, J, chi, jchar or jmobius of an object");
  compute->add_option("--object", spec.object, "registry name, inline JSON, or @file");
  compute->add_option("--invariant", spec.invariant, "mu | J | chi | jchar | jmobius")->required();
  compute->add_option("--q", spec.q, "field size for L_q^n");
  compute->add_option("--n", spec.n, "dimension for L_q^n");
  add_common(compute, spec);

  auto* verify = app.add_subcommand("verify", "Run an identity verification suite");
  verify->add_option("--suite", spec.suite, "suite name or all");
  verify->add_option("--object", spec.object, "restrict object-based suites to one object");
  verify->add_option("--fixture", spec.fixture, "restrict the valuation suite to one fixture");
  verify->add_option("--max-ground", spec.max_ground, "catalog ground-set bound");
  verify->add_option("--max-rank", spec.max_rank, "catalog rank bound");
  verify->add_option("--q", spec.q, "field size for the q-series suite");
  verify->add_option("--n", spec.n, "dimension for the q-series suite");
  add_common(verify, spec);

  auto* search = app.add_subcommand("search", "Catalog small matroids by M(M,-1)");
  search->add_option("--max-ground", spec.max_ground, "ground-set bound (default 7)");
  search->add_option("--max-rank", spec.max_rank, "rank bound (default 3)");
  add_common(search, spec);

  auto* subdivision = app.add_subcommand("subdivision", "Inclusion-exclusion check on a polytope subdivision");
  subdivision->add_option("--fixture", spec.fixture, "fixture name, inline JSON, or @file")->required();
  subdivision->add_option("--invariant", spec.invariant, "jchar (default) | jmobius | chi");
  add_common(subdivision, spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const auto r = jmobius::detail::error_result(spec.format, "ParseError", e.what());
    std::cout << r.output;
    return r.exit_code;
  }

  for (auto* sub : {compute, verify, search, subdivision})
    if (sub->parsed()) spec.command = sub->get_name();

  const auto result = jmobius::run(spec);
  std::cout << result.output;
  return result.exit_code;
}
