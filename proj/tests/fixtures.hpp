#pragma once

#include <string>

#include "glsm/model.hpp"

namespace fixtures {

inline glsm::GLSMModel quintic() {
  return glsm::parse_model(R"({"r": 6, "k": 1, "weights": [[1,1,1,1,1,-5]], "r_charges": [0,0,0,0,0,1],
    "d_w": 1, "theta": ["1"], "variables": ["x1","x2","x3","x4","x5","p"],
    "potential": "p*x1^5+p*x2^5+p*x3^5+p*x4^5+p*x5^5", "assert_critical_proper": true})");
}

inline glsm::GLSMModel p1() {
  return glsm::parse_model(R"({"r": 2, "k": 1, "weights": [[1,1]], "r_charges": [0,0], "d_w": 1, "theta": ["1"],
    "potential": null, "assert_critical_proper": false})");
}

inline glsm::GLSMModel cubic() {
  return glsm::parse_model(R"({"r": 2, "k": 1, "weights": [[1,-3]], "r_charges": [1,0], "d_w": 3, "theta": ["-1"],
    "variables": ["x","p"], "potential": "p*x^3", "assert_critical_proper": true})");
}

// (2,2) curve in P1 x P1
inline glsm::GLSMModel rank2() {
  return glsm::parse_model(R"({"r": 5, "k": 2, "weights": [[1,1,0,0,-2],[0,0,1,1,-2]], "r_charges": [0,0,0,0,1],
    "d_w": 1, "theta": ["1","1"], "variables": ["x1","x2","y1","y2","p"],
    "potential": "p*x1^2*y1^2 + p*x2^2*y2^2", "assert_critical_proper": true})");
}

}  // namespace fixtures
