#pragma once

#include <string>
#include <vector>

#include "commprob/rational.hpp"
#include "commprob/spectrum.hpp"

namespace commprob {

// Spectrum snapshots serialize as a JSON array of
//   {"value": "num/den", "witness": "...", "order": N}
// in the order given (callers normally pass corpus output, i.e. value-descending).
std::string spectrum_to_json(const std::vector<SpectrumEntry>& entries);

// Accepts the object form above as well as arrays of bare "num/den" strings
// (witness empty, order zero).  Throws std::invalid_argument on malformed input.
std::vector<SpectrumEntry> spectrum_from_json(const std::string& text);

// CSV with header "value,witness,order"; values stay exact rational strings.
std::string spectrum_to_csv(const std::vector<SpectrumEntry>& entries);

std::string rationals_to_json(const std::vector<Rational>& values);
std::vector<Rational> rationals_from_json(const std::string& text);

// RFC-4180 style quoting; returns the field unchanged when no quoting is needed.
std::string csv_escape(const std::string& field);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace commprob
