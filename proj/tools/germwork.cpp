// Copyright 2026 The germwork authors
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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "germwork/catalog.hpp"
#include "germwork/runner.hpp"

namespace {

germwork::Document load_input(const std::string& input, bool force) {
  if (input.rfind("catalog:", 0) == 0) {
    return germwork::catalog(input.substr(8));
  }
  std::ifstream in(input);
  if (!in) {
    germwork::fail("SchemaError", "cannot open input file: " + input);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    germwork::fail("SchemaError", std::string("invalid JSON: ") + e.what());
  }
  germwork::Document d = germwork::document_from_json(j, force);
  if (d.name.empty()) {
    d.name = input;
  }
  return d;
}

bool is_usage_error(const germwork::Error& e) {
  return e.code() == "SchemaError" || e.code() == "UnknownName" ||
         e.code() == "IncompatibleKind" || e.code() == "SizeMismatch" ||
         e.code() == "TooLarge";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"germwork: finite restriction semigroups, their germ "
               "categories, constellations and convolution algebras"};
  app.require_subcommand(1);

  std::string input;
  std::string ring_name = "q";
  std::string format = "json";
  std::string out_path;
  bool force = false;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  bool with_timings = false;

  auto add_common = [&](CLI::App* sub, bool with_ring) {
    sub->add_option("input", input, "input.json or catalog:NAME")->required();
    sub->add_flag("--force", force, "lift size guards");
    sub->add_option("--seed", seed, "seed for randomized property rounds");
    sub->add_option("--threads", threads, "worker pool size");
    sub->add_option("--out", out_path, "write the report to a file");
    sub->add_flag("--timings", with_timings, "print timings to stderr");
    if (with_ring) {
      sub->add_option("--ring", ring_name, "coefficient ring: q, z or zp:<p>");
    }
  };

  const std::vector<std::string> commands = {
      "check", "analyze", "germs", "booleanize", "esn", "decompose",
      "algebra-iso", "pr"};
  for (const auto& c : commands) {
    add_common(app.add_subcommand(c), c == "algebra-iso");
  }
  auto* exp = app.add_subcommand("export", "serialize a document");
  exp->add_option("input", input, "input.json or catalog:NAME")->required();
  exp->add_option("--format", format, "json or dot");
  exp->add_option("--out", out_path, "write to a file");
  exp->add_flag("--force", force, "lift size guards");
  auto* list = app.add_subcommand("list", "list built-in catalog names");

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  try {
    if (list->parsed()) {
      for (const auto& name : germwork::acceptance_catalog()) {
        std::cout << name << "\n";
      }
      std::cout << "pt:4\ni:4\nchain:5\nantichain-bottom:4\n";
      return 0;
    }
    const germwork::Document doc = load_input(input, force);
    std::string bytes;
    bool ok = true;
    if (exp->parsed()) {
      bytes = germwork::export_document(doc, format);
    } else {
      germwork::RunOptions opt;
      opt.ring = germwork::ring_from_string(ring_name);
      opt.force = force;
      opt.seed = seed;
      opt.threads = threads;
      const germwork::Report report =
          germwork::run_command(app.get_subcommands().front()->get_name(),
                                doc, opt);
      bytes = report.to_bytes();
      ok = report.ok();
    }
    if (out_path.empty()) {
      std::cout << bytes;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << bytes;
    }
    if (with_timings) {
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - started);
      std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    }
    return ok ? 0 : 1;
  } catch (const germwork::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
