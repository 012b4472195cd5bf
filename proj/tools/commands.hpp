#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace dforge::cli {

enum class Format { Text, Json };

// Process exit statuses.
constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageError = 2;

struct Context {
  Format format = Format::Text;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

int cmd_validate(const Context& ctx, const std::string& file);
int cmd_invariants(const Context& ctx, const std::string& file);
int cmd_fiber(const Context& ctx, const std::string& file);
int cmd_monodromy(const Context& ctx, const std::string& file, bool homology, bool achiral);

struct EnumerateArgs {
  std::optional<int> genus;
  bool all = false;
  std::optional<int> max_v;
};
int cmd_enumerate(const Context& ctx, const EnumerateArgs& args);

int cmd_family(const Context& ctx, const std::string& kind, int genus,
               const std::optional<std::string>& output);

int cmd_render(const Context& ctx, const std::string& file, bool dot, bool svg,
               const std::optional<std::string>& output);

}  // namespace dforge::cli
