#pragma once

#include "qadv/chebapprox.hpp"
#include "qadv/qsvt.hpp"
#include "qadv/reference.hpp"

namespace qadv {

// One PDE instance.  For dim == 2 the advection speed has per-axis
// components and n counts spatial qubits per axis.
struct ProblemSpec {
    int dim = 1;
    double cx = 0.0;
    double cy = 0.0;
    double nu = 0.0;
    double domain = 4.0;
    double T = 0.0;
    int p = 1;          // half-order; stencil order 2p
    int n = 0;          // spatial qubits per axis; 0 = plan from target_eps
    double target_eps = 1e-3;
    InitialCondition ic;
    double eps_poly = 1e-8;
    double angle_tol = 1e-9;
};

struct SolveReport {
    std::vector<double> grid_solution;  // dim 2: row-major, x fastest
    double error_vs_exact = 0.0;
    double error_vs_semidiscrete = 0.0;
    double success_rate = 0.0;
    double predicted_success = 0.0;
    GateCounts gate_counts;
    int total_qubits = 0;
    int n_used = 0;
    int ancillas = 0;  // total non-system qubits
    DegreePlan degrees_x;
    DegreePlan degrees_y;  // dim 2 only
    double readout_scale = 0.0;  // divides the projected amplitudes
    TheoryReport theory;
};

// Per-axis circuit assembly record (shared by the solver and the planners).
struct AxisPipeline {
    QsvtCircuit qsvt;        // hoisted into the grid frame
    ChebPoly q_even, q_odd;  // as realized (margin applied, odd sign fixed)
    DegreePlan plan;
    double margin = 1.0;          // extra subnormalization of the target
    double safety_scale = 1.0;    // 1/(1+eps) factor from the planner
    bool single_sequence = false; // definite-parity path (one signal ancilla)
    double encoding_scale = 0.0;  // c_p * dx
};

// Build the axis circuit for speed c on the given grid.  When
// count_only is set the angle solve is skipped (phases zeroed); gate counts
// and register shapes are still exact.
AxisPipeline build_axis_pipeline(double c, double nu, double T, int p, const GridSpec& grid,
                                 double eps_poly, double angle_tol, bool count_only = false);

// Spectral value multiplying Fourier mode k of the initial data (includes
// the realized scale and margins): the classical oracle for the pipeline.
cd axis_mode_factor(const AxisPipeline& axis, int p, const GridSpec& grid, long k);

SolveReport solve_1d(const ProblemSpec& spec);
SolveReport solve_2d(const ProblemSpec& spec);
SolveReport solve(const ProblemSpec& spec);

// Post-selection probability predicted from the spectral symbol alone.
double success_rate_prediction(const ProblemSpec& spec);

// Plan-only variant: no angle solve, no simulation; fills degrees, qubit
// budget, gate counts and predicted success.
SolveReport plan_and_count(const ProblemSpec& spec);

}  // namespace qadv
