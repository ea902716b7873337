#include <benchmark/benchmark.h>

#include <lanekit/edges.hpp>
#include <lanekit/hough.hpp>
#include <lanekit/imaging.hpp>
#include <lanekit/lane.hpp>
#include <lanekit/sim.hpp>

namespace {

using namespace lanekit;

ImageBuffer test_frame() {
    const RoadSpec road = RoadSpec::straight(50.0);
    const CameraSpec cam;
    return render_frame(road, VehicleState{0.0, 0.05, 0.0}, cam);
}

void BM_render_frame(benchmark::State& state) {
    const RoadSpec road = RoadSpec::straight(50.0);
    const CameraSpec cam;
    const VehicleState pose{0.0, 0.05, 0.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(render_frame(road, pose, cam));
}
BENCHMARK(BM_render_frame)->Unit(benchmark::kMillisecond);

void BM_gaussian_blur(benchmark::State& state) {
    const ImageBuffer gray = to_grayscale(test_frame());
    for (auto _ : state)
        benchmark::DoNotOptimize(gaussian_blur(gray, 1.0, 5));
}
BENCHMARK(BM_gaussian_blur)->Unit(benchmark::kMillisecond);

void BM_canny(benchmark::State& state) {
    const ImageBuffer gray = to_grayscale(test_frame());
    for (auto _ : state)
        benchmark::DoNotOptimize(canny(gray, 50, 150, 1.0, 5));
}
BENCHMARK(BM_canny)->Unit(benchmark::kMillisecond);

void BM_hough_transform(benchmark::State& state) {
    const ImageBuffer gray = to_grayscale(test_frame());
    const ImageBuffer edges = canny(gray, 50, 150, 1.0, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(hough_transform(edges, 1.0, kPi / 180.0));
}
BENCHMARK(BM_hough_transform)->Unit(benchmark::kMillisecond);

void BM_detect_lane(benchmark::State& state) {
    const ImageBuffer frame = test_frame();
    const LaneConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(detect_lane(frame, cfg, std::nullopt));
}
BENCHMARK(BM_detect_lane)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
