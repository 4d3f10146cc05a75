#ifndef REGAL_PIPELINE_HPP
#define REGAL_PIPELINE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regal/catalog.hpp"
#include "regal/embed.hpp"
#include "regal/special.hpp"

namespace regal {

/// End-to-end request: realize G as the full automorphism group of a number
/// field compatibly with a prescribed action on L.
struct PipelineRequest {
  FiniteGroup g;
  std::optional<QPoly> l_minpoly;  // absent: L = Q
  std::vector<int> alpha_map;      // empty: the unique map to trivial Aut
  Rat y = 0;                       // trinomial-family parameter
  int budget = 25;                 // bound on specialization coordinates
  std::optional<std::pair<Rat, Rat>> forced_point;  // (z, t)
};

/// Transcript of the independent automorphism-group computation on the final
/// field: root counts of the two defining polynomials and the reconstructed
/// Cayley table.
struct AutTranscript {
  std::string method;  // "two-generator" or "two-generator+direct"
  int field_degree = 0;
  int base_root_count = 0;    // roots of the base minimal polynomial in E
  int gadget_root_count = 0;  // roots of the specialized trinomial in E
  FiniteGroup group;          // reconstructed Aut(E/Q)
};

struct PipelineCertificate {
  std::string route;  // "catalog-specialization" | "galois" | "fiber-product"
  PipelineRequest request;
  SolutionCertificate solution;
  std::vector<std::string> notes;
  // catalog-specialization payload (everything a stateless verifier needs):
  std::optional<std::string> entry_name;
  std::optional<BiPoly> entry_poly;    // over (Z, X)
  std::optional<BiPoly> gadget_poly;   // over (T, X)
  std::optional<Rat> z, t;
  std::optional<QPoly> base_minpoly;   // minpoly of the Galois layer N
  std::optional<QPoly> gadget_minpoly; // the trinomial at T = t
  std::optional<QPoly> base_root_rep;  // N's generator inside E
  std::optional<QPoly> gadget_root_rep;
  std::optional<AutTranscript> oracle;
};

/// Run the pipeline: direct Galois solution when alpha is an isomorphism and
/// L/Q is Galois; catalog entry + trinomial + specialization when L = Q;
/// fiber-product reduction for the supported proper epimorphism shapes.
/// Errors: CatalogMiss, BudgetExhausted, DegreeDrop, TransferFailure, plus
/// anything raised by the underlying stages.
PipelineCertificate realize_aut(const PipelineRequest& req);

/// Stateless re-verification of an emitted certificate. For the
/// catalog-specialization route this re-derives Aut(E/Q) from the embedded
/// two-generator tower; for the other routes it re-runs the solution
/// verifier. Every check is named in the report.
VerificationReport verify_certificate(const PipelineCertificate& cert);

std::string pipeline_to_json_text(const PipelineCertificate& cert,
                                  bool pretty = false);
PipelineCertificate pipeline_from_json_text(const std::string& text);

}  // namespace regal

#endif
