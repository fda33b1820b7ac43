// Copyright 2026 The contragen Authors. All Rights Reserved.
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

// Writes the replay cassettes under fixtures/cassettes by running the
// method-2 and self-instruct pipelines against the scripted stub model.
//
// usage: make_cassettes --data-dir DIR --fixtures DIR --out DIR

#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "contragen/client.h"
#include "contragen/contradiction_type.h"
#include "contragen/method2.h"
#include "contragen/prompt_template.h"
#include "contragen/transport.h"
#include "contragen/typology.h"
#include "stub_responder.h"

namespace fs = std::filesystem;
using namespace contragen;

namespace {

constexpr std::uint64_t kSeed = 1234;
const std::vector<std::string> kFourTypes = {"Factive (embedding context)", "Structure", "Lexical",
                                             "World Knowledge"};

template <typename Fn>
void record(const fs::path& path, stub::StubOptions options, Fn&& run) {
  fs::remove(path);
  llm::RecordingTransport transport(std::make_unique<stub::ScriptedTransport>(std::move(options)),
                                    llm::Cassette{}, path,
                                    [] { return std::string("2026-01-01T00:00:00Z"); });
  llm::ChatClient client(transport);
  run(client);
  std::cout << path.string() << ": " << transport.snapshot().size() << " entries\n";
}

void loop(llm::ChatClient& client, const fs::path& data_dir, std::vector<ContradictionType> seeds,
          int iterations) {
  const auto instance = llm::load_bundled_template(data_dir, llm::kInstanceTemplate);
  const auto new_type = llm::load_bundled_template(data_dir, llm::kNewTypeTemplate);
  typology::TypePool pool(std::move(seeds), kSeed);
  for (int i = 0; i < iterations; ++i) {
    typology::run_iteration(pool, client, {instance, new_type}, typology::LoopOptions{});
  }
}

void method2_run(llm::ChatClient& client, const fs::path& data_dir,
                 const std::vector<std::string>& premises) {
  const auto tmpl = llm::load_bundled_template(data_dir, llm::kMethod2Template);
  const auto types = select_types(load_seed_types(data_dir), kFourTypes);
  method2::generate_for_premises(premises, types, client, tmpl, method2::Options{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Regenerates the stub-model replay cassettes");
  std::string data_dir;
  std::string fixtures;
  std::string out;
  app.add_option("--data-dir", data_dir)->required();
  app.add_option("--fixtures", fixtures)->required();
  app.add_option("--out", out)->required();
  CLI11_PARSE(app, argc, argv);

  try {
    const fs::path dir = out;
    fs::create_directories(dir);
    const auto seeds = load_seed_types(data_dir);
    const auto profile_premises =
        method2::read_premises(fs::path(fixtures) / "profile" / "premises.txt");

    record(dir / "loop.json", {}, [&](llm::ChatClient& c) { loop(c, data_dir, seeds, 3); });
    record(dir / "method2_demo.json", {}, [&](llm::ChatClient& c) {
      method2_run(c, data_dir,
                  {"Two blond women are hugging one another.", "A man plays the guitar."});
    });
    record(dir / "profile_method2.json", {profile_premises},
           [&](llm::ChatClient& c) { method2_run(c, data_dir, profile_premises); });
    record(dir / "profile_method3.json", {}, [&](llm::ChatClient& c) {
      loop(c, data_dir, select_types(seeds, kFourTypes), 10);
    });
  } catch (const std::exception& e) {
    std::cerr << "make_cassettes: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
