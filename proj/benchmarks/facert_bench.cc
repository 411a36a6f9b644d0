// Copyright 2026 The Thompson Ends Authors.
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
#include <string>

#include <benchmark/benchmark.h>

#include "thompson/facert.h"

namespace thompson {
namespace {

void BM_BuildTCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(TCertificate());
}
BENCHMARK(BM_BuildTCertificate)->Unit(benchmark::kMillisecond);

void BM_VerifyTCertificate(benchmark::State& state) {
  const FACertificate cert = TCertificate();
  for (auto _ : state) VerifyCertificate(cert);
}
BENCHMARK(BM_VerifyTCertificate)->Unit(benchmark::kMillisecond);

void BM_CertificateJsonRoundtrip(benchmark::State& state) {
  const FACertificate cert = VCertificate();
  for (auto _ : state) {
    const std::string text = CertificateToJson(cert);
    benchmark::DoNotOptimize(CertificateFromJson(text));
  }
}
BENCHMARK(BM_CertificateJsonRoundtrip);

}  // namespace
}  // namespace thompson
