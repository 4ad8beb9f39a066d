#pragma once

#include <string>

#include "schro/grid.hpp"

namespace schro {

/// A stored state: the field, the grid it lives on, and the time it was
/// sampled at.
struct Snapshot {
    WaveFunction u;
    GridCircle grid;
    double time = 0.0;
};

/// CSV snapshot: one comment header line carrying n_intervals, length, time
/// and representation, a column header "x,re,im,abs2", then one row per grid
/// value with shortest round-trip double formatting (read back bitwise-equal).
void snapshot_write(const WaveFunction& u, const GridCircle& grid, double time,
                    const std::string& path);

/// Parses a snapshot file; malformed content raises ParseError carrying the
/// offending line number.
Snapshot snapshot_read(const std::string& path);

/// snapshot_read plus a grid check: the stored header must match the
/// requested grid and representation.
Snapshot snapshot_read(const std::string& path, const GridCircle& expected,
                       Representation expected_rep);

}  // namespace schro
