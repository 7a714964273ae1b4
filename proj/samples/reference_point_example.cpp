// Copyright 2026 The dcnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reproduces the qLDPC vs surface-code fleet comparison with the library API.

#include <cstdio>

#include "dcnet/logistics.hpp"
#include "dcnet/pipeline_qldpc.hpp"
#include "dcnet/pipeline_surface.hpp"
#include "dcnet/solvers.hpp"

int main() {
    using namespace dcnet;

    const Scenario qldpc = Scenario::reference_defaults();
    const StageBreakdown qb = evaluate(qldpc);
    const FleetReport qf = fleet_qldpc(qldpc, qb);

    const SolveResult patch = min_surface_patch(qldpc.transport_time, qldpc.params, 0.08);
    if (!patch.feasible) {
        std::fprintf(stderr, "surface patch solve failed: %s\n", patch.diagnostic.c_str());
        return 1;
    }
    const SurfaceScenario surface{SurfaceConfig(whole_qubits(patch.value)), qldpc.params,
                                  qldpc.transport_time, qldpc.code.memory_qubits(),
                                  qldpc.network};
    const SurfaceBreakdown sb = evaluate_sc(surface);
    const FleetReport sf = fleet_surface(surface, sb);

    std::printf("%-8s %10s %10s %8s %10s\n", "code", "patch", "F_final", "trucks", "USD/bit");
    std::printf("%-8s %10.0f %10.4f %8lld %10s\n", "qLDPC", qldpc.code.memory_qubits(),
                qb.fidelity, static_cast<long long>(qf.truck_total),
                format_usd(qf.cost.total).c_str());
    std::printf("%-8s %10.0f %10.4f %8lld %10s\n", "surface", surface.code.patch_qubits(),
                sb.fidelity, static_cast<long long>(sf.truck_total),
                format_usd(sf.cost.total).c_str());
    return 0;
}
