#include <benchmark/benchmark.h>

#include "reebsym/automorphism.hpp"
#include "reebsym/corpus.hpp"
#include "reebsym/reeb_graph.hpp"
#include "reebsym/tree_action.hpp"
#include "reebsym/verify.hpp"

namespace {

using reebsym::Atom;

Atom polyhedron(int which) {
  switch (which) {
    case 0: return reebsym::octahedron_atom();
    case 1: return reebsym::cuboctahedron_atom();
    default: return reebsym::icosidodecahedron_atom();
  }
}

void BM_AutomorphismGroup(benchmark::State& state) {
  const Atom atom = polyhedron(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::automorphism_group(atom).order());
  state.counters["darts"] = atom.map().dart_count();
}
BENCHMARK(BM_AutomorphismGroup)->DenseRange(0, 2);

void BM_RoseAutomorphisms(benchmark::State& state) {
  const Atom atom = reebsym::rose_atom(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::automorphism_group(atom).order());
}
BENCHMARK(BM_RoseAutomorphisms)->RangeMultiplier(4)->Range(4, 256);

void BM_ReebGraph(benchmark::State& state) {
  const reebsym::ScalarMesh mesh = reebsym::lift(polyhedron(static_cast<int>(state.range(0)))).mesh;
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::reeb_graph(mesh).node_count());
  state.counters["triangles"] = mesh.triangle_count();
}
BENCHMARK(BM_ReebGraph)->DenseRange(0, 2);

void BM_MeshSymmetryGroup(benchmark::State& state) {
  const reebsym::ScalarMesh mesh = reebsym::lift(polyhedron(static_cast<int>(state.range(0)))).mesh;
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::mesh_symmetry_group(mesh).order());
}
BENCHMARK(BM_MeshSymmetryGroup)->DenseRange(0, 2);

void BM_VerifyAtom(benchmark::State& state) {
  const Atom atom = polyhedron(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::verify_atom(atom).passed());
}
BENCHMARK(BM_VerifyAtom)->DenseRange(0, 2);

void BM_VerifyMesh(benchmark::State& state) {
  const reebsym::MeshScenario s = reebsym::banana_rotation_scenario(3);
  for (auto _ : state) benchmark::DoNotOptimize(reebsym::verify_mesh(s.lifted.mesh, s.generators).passed());
}
BENCHMARK(BM_VerifyMesh);

}  // namespace

BENCHMARK_MAIN();
