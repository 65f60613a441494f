#ifndef UQ_IO_HPP
#define UQ_IO_HPP

#include <string>
#include <vector>

#include "uq/learn.hpp"
#include "uq/model.hpp"

namespace uq {

// Structured text format (JSON with exact decimal/fraction strings for all
// numbers). parse(serialize(i)) == i bit-exactly.
std::string serialize_instance(const Instance& instance);
Instance parse_instance(const std::string& text);

void write_instance_file(const Instance& instance, const std::string& path);
Instance read_instance_file(const std::string& path);

// Same vertex schema with a top-level samples array in place of the
// per-vertex true weights.
std::string serialize_sample_set(const WeightSampleSet& samples);
WeightSampleSet parse_sample_set(const std::string& text);

void write_sample_set_file(const WeightSampleSet& samples, const std::string& path);
WeightSampleSet read_sample_set_file(const std::string& path);

std::string serialize_vertex_set(const std::vector<VertexId>& set);
std::vector<VertexId> parse_vertex_set(const std::string& text);

}  // namespace uq

#endif
