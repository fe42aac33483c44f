#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wavesel/cli.hpp"

int main(int argc, char** argv) {
  using namespace wavesel;
  using cli::ExitCode;

  CLI::App app{"Wavefront path planner with terrain-based robot selection"};

  cli::RunConfig config;
  std::string start_text, goal_text, emit_field;
  int connectivity = 4;
  std::string mode = "single";
  std::string format = "json";

  app.add_option("--map", config.map_path, "Map file")->required();
  app.add_option("--start", start_text, "Start cell as R,C (default: the 'A' marker)");
  app.add_option("--goal", goal_text, "Goal cell as R,C (default: the 'B' marker)");
  app.add_option("--connectivity", connectivity, "Neighborhood: 4 or 8")
      ->check(CLI::IsMember({4, 8}));
  app.add_option("--mode", mode, "single: one robot; segmented: one robot per terrain run")
      ->check(CLI::IsMember({"single", "segmented"}));
  app.add_option("--format", format, "json or ascii")->check(CLI::IsMember({"json", "ascii"}));
  app.add_option("--emit-field", emit_field, "Write the wave value field as a binary PPM");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "wavesel: error: bad_arguments: " << e.what() << '\n';
    return static_cast<int>(ExitCode::BadArguments);
  }

  for (auto [text, slot, flag] : {std::tuple{&start_text, &config.start, "--start"},
                                  std::tuple{&goal_text, &config.goal, "--goal"}}) {
    if (text->empty()) continue;
    *slot = cli::parse_coord(*text);
    if (!*slot) {
      std::cerr << "wavesel: error: bad_arguments: " << flag << " expects R,C, got '" << *text
                << "'\n";
      return static_cast<int>(ExitCode::BadArguments);
    }
  }
  config.connectivity = connectivity == 8 ? Connectivity::Eight : Connectivity::Four;
  config.mode = mode == "segmented" ? Mode::Segmented : Mode::Single;
  config.format = format == "ascii" ? cli::Format::Ascii : cli::Format::Json;
  if (!emit_field.empty()) config.emit_field = emit_field;

  return static_cast<int>(cli::run(config, std::cout, std::cerr));
}
