#include "ggp/acceptance.hpp"
#include <ostream>
namespace ggp {
bool run_acceptance(std::ostream& out, const AcceptanceOptions&) { out << "TODO\n"; return false; }
}
