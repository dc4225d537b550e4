#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "irreg/graph.hpp"

namespace irreg {

// Pipeline stage at which a construction guard failed.
enum class Stage { params, partition, step1, step2, buffer, step3, verify };

std::string_view stage_name(Stage s);

class StageError : public std::runtime_error {
  public:
    StageError(Stage stage, const std::string& what, std::optional<Vertex> witness = std::nullopt)
        : std::runtime_error(std::string(stage_name(stage)) + ": " + what), stage_{stage}, witness_{witness} {}

    [[nodiscard]] Stage stage() const { return stage_; }
    [[nodiscard]] std::optional<Vertex> witness() const { return witness_; }

  private:
    Stage stage_;
    std::optional<Vertex> witness_;
};

} // namespace irreg
