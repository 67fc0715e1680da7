#pragma once

#include <string>

#include "builder.hpp"
#include "extract.hpp"
#include "hilbert.hpp"
#include "metric.hpp"

#include <json.hpp>

namespace ue {

using ordered_json = nlohmann::ordered_json;

// --- distance matrices ---

/// CSV is row-major; an optional header row carries point labels.
FiniteMetricSpace matrix_from_csv(const std::string& text);
std::string matrix_to_csv(const FiniteMetricSpace& m, bool header = false);

/// {"n": int, "d": flattened upper triangle, "labels": [...]}
FiniteMetricSpace matrix_from_json(const std::string& text);
std::string matrix_to_json(const FiniteMetricSpace& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// --- reports ---

ordered_json cert_to_json(const std::vector<CertEntry>& cert);
std::vector<CertEntry> cert_from_json(const ordered_json& j);

ordered_json extraction_to_json(const ExtractionResult& r);
ExtractionResult extraction_from_json(const ordered_json& j);

ordered_json embedding_to_json(const EmbeddingReport& r);

std::string coordinates_to_csv(const CoordinateEmbedding& emb);

}  // namespace ue
