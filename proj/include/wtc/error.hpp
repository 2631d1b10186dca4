#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wtc {

enum class errc {
  vertex_out_of_range,
  self_loop,
  empty_graph,
  disconnected,
  trivial_graph,
  complete_graph,
  malformed_graph6,
  malformed_edge_list,
  invalid_argument,
  wrong_product_kind,
  infeasible_spec,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::vertex_out_of_range: return "vertex_out_of_range";
    case errc::self_loop: return "self_loop";
    case errc::empty_graph: return "empty_graph";
    case errc::disconnected: return "disconnected";
    case errc::trivial_graph: return "trivial_graph";
    case errc::complete_graph: return "complete_graph";
    case errc::malformed_graph6: return "malformed_graph6";
    case errc::malformed_edge_list: return "malformed_edge_list";
    case errc::invalid_argument: return "invalid_argument";
    case errc::wrong_product_kind: return "wrong_product_kind";
    case errc::infeasible_spec: return "infeasible_spec";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace wtc
