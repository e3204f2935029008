#pragma once

#include "orbitfn/models.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>

namespace orbitfn {

using json = nlohmann::json;

// Grid and weight-set export. CSV columns: barycentric integers followed by
// orthonormal coordinates; JSON carries {algebra, family, M, count, points}.
void write_grid_csv(std::ostream& os, const Algebra& alg, const std::vector<GridPoint>& pts);
void write_weights_csv(std::ostream& os, const Algebra& alg, const std::vector<GridWeight>& wts);
json grid_to_json(const Algebra& alg, GridFamily family, Int M, const std::vector<GridPoint>& pts);
json weights_to_json(const Algebra& alg, GridFamily family, Int M,
                     const std::vector<GridWeight>& wts);

// Sampled/spectral fields: {algebra, family, M, index_order:"lex", kind,
// data:[[re,im],...]}.
json field_to_json(const SampledField& f);
json field_to_json(const SpectralField& f);
SampledField sampled_field_from_json(const json& j);
SpectralField spectral_field_from_json(const json& j);

void write_field_csv(std::ostream& os, const Algebra& alg, const SampledField& f);
void write_field_csv(std::ostream& os, const Algebra& alg, const SpectralField& f);

json experiment_to_json(const ExperimentResult& r);

// Slice matrices: one CSV per component (re, im, abs), leading header rows
// describing the sampled ranges.
void write_slice_csv(std::ostream& os, const SliceResult& s, const std::string& component);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace orbitfn
