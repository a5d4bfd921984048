#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "motivic/formulas.hpp"
#include "motivic/motive.hpp"

namespace motivic::cli {

enum class Format { kText, kJson, kCsv };

// Bad flags or ranges; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Genus genus_min = 2;
  Genus genus_max = 30;
  std::uint64_t m_min = 1;
  std::uint64_t m_max = 100;
  Format format = Format::kText;
  std::optional<std::string> out_path;
  // 1 runs sequentially; 0 means one worker per hardware thread.
  std::size_t jobs = 1;
  bool diamond = false;
  ConjecturalVariant variant = ConjecturalVariant::kFaithful;

  // Throws UsageError unless 2 <= genus_min <= genus_max and 1 <= m_min <= m_max.
  void validate() const;
  std::size_t genus_count() const { return static_cast<std::size_t>(genus_max - genus_min + 1); }
};

enum ExitCode : int {
  kSuccess = 0,
  kVerifiedFalse = 1,
  kUsageError = 2,
  kEvaluationError = 3,
};

}  // namespace motivic::cli
