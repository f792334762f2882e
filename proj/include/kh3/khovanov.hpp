#pragma once

#include <map>
#include <utility>

#include "kh3/abelian.hpp"
#include "kh3/diagram.hpp"
#include "kh3/int_matrix.hpp"
#include "kh3/laurent.hpp"

namespace kh3 {

// Bigraded homology: only nontrivial cells are stored.
struct HomologyTable {
    std::map<std::pair<int, int>, AbelianGroup> cells;

    AbelianGroup group(int i, int j) const {
        auto it = cells.find({i, j});
        return it == cells.end() ? AbelianGroup{} : it->second;
    }
    void set(int i, int j, AbelianGroup g) {
        if (g.trivial())
            cells.erase({i, j});
        else
            cells[{i, j}] = std::move(g);
    }
    friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

struct HomologyOptions {
    int max_crossings = 18;  // 2^c state enumeration guard, overridable
    int workers = 0;         // 0: KH3_WORKERS env var, else hardware concurrency
};

// Homological and quantum degree of an enhanced state:
//   i = (w - sigma)/2,  j = (3w - sigma + 2 tau)/2.
std::pair<int, int> degrees(const LinkDiagram& d, const EnhancedState& s);

// Matrix of d^i restricted to quantum degree j, target basis indexing rows.
// Basis order is canonical and bit-reproducible: states sorted by ascending
// B-mask value (crossing 0 = least significant bit); within a state,
// enhancements sorted by ascending minus-mask value (circle 0 = least
// significant bit, circles numbered by smallest incident arc).
IntegerMatrix differential_matrix(const LinkDiagram& d, int i, int j);

// Integer Khovanov homology of the diagram via the enhanced-state complex,
// computed one quantum degree at a time (the subcomplexes are independent
// and are distributed over worker threads).
HomologyTable homology(const LinkDiagram& d, const HomologyOptions& opts = {});

// sum over cells of (-1)^i rank q^j.
LaurentPoly graded_euler_characteristic(const HomologyTable& t);

// Unnormalized Jones polynomial straight from the state sum, in the variable
// convention that matches graded_euler_characteristic(homology(d)) exactly.
LaurentPoly kauffman_bracket_jones(const LinkDiagram& d, const HomologyOptions& opts = {});

// d^{i+1} . d^i == 0 for every (i, j), checked sparsely.
bool differentials_square_to_zero(const LinkDiagram& d, const HomologyOptions& opts = {});

}  // namespace kh3
