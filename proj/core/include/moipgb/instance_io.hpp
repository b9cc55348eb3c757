#ifndef MOIPGB_INSTANCE_IO_HPP
#define MOIPGB_INSTANCE_IO_HPP

#include <iosfwd>
#include <string>

#include "moipgb/model.hpp"

namespace moipgb {

// JSON instance documents.  Integers may be given as numbers or as decimal
// strings when they do not fit in 64 bits.  Malformed input throws
// InvalidInput; the parsed instance is validated before it is returned.
MoipInstance parse_instance(const std::string& text);
MoipInstance read_instance(std::istream& in);
MoipInstance load_instance(const std::string& path);

std::string dump_instance(const MoipInstance& inst);

IntVec parse_vector(const std::string& text);

}  // namespace moipgb

#endif  // MOIPGB_INSTANCE_IO_HPP
