// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace splatsem::core {

// Attribute layout of one primitive, flattened to 59 floats:
// [center(3) | scale(3) | rotation wxyz(4) | opacity(1) | color_sh(48)].
constexpr int kCenterDim = 3;
constexpr int kScaleDim = 3;
constexpr int kRotationDim = 4;
constexpr int kOpacityDim = 1;
constexpr int kColorShDim = 48;
constexpr int kAttributeDim =
    kCenterDim + kScaleDim + kRotationDim + kOpacityDim + kColorShDim;  // 59

constexpr int kCenterOffset = 0;
constexpr int kScaleOffset = 3;
constexpr int kRotationOffset = 6;
constexpr int kOpacityOffset = 10;
constexpr int kColorShOffset = 11;

// Zeroth-order spherical harmonic basis constant; rgb = 0.5 + C0 * dc.
constexpr float kShC0 = 0.28209479177387814f;

struct GaussianPrimitive {
    Eigen::Vector3f center = Eigen::Vector3f::Zero();           // meters
    Eigen::Vector3f scale = Eigen::Vector3f::Ones();            // meters, > 0
    Eigen::Vector4f rotation = {1.f, 0.f, 0.f, 0.f};            // unit quaternion (w,x,y,z)
    float opacity = 1.f;                                        // [0,1]
    std::array<float, kColorShDim> color_sh{};                  // 3 DC + 45 higher-order
};

struct SourceMeta {
    std::optional<int64_t> frame_count;
    std::optional<float> psnr;
};

// Primitive order is an identity: index i stays stable through save/load.
struct GaussianScene {
    std::vector<GaussianPrimitive> primitives;
    std::string scene_id;
    std::optional<SourceMeta> source_meta;

    size_t size() const { return primitives.size(); }
    bool empty() const { return primitives.empty(); }
};

// Normalizes in double precision. Quaternions already unit within |n^2-1| <= 1e-6
// keep their bits so activated-domain round-trips stay exact.
Eigen::Vector4f normalize_quaternion(const Eigen::Vector4f& q);

// Throws ValidationError naming the primitive index on non-finite values,
// out-of-range opacity, or non-positive scale.
void validate_primitive(const GaussianPrimitive& p, size_t index);

void pack_attributes(const GaussianPrimitive& p, float* out59);
GaussianPrimitive unpack_attributes(const float* in59);

// N'x59 double matrix of the (subset of a) scene, rows in index order.
Eigen::MatrixXd attribute_matrix(const GaussianScene& scene,
                                 const std::vector<uint32_t>& indices);
// Nx3 double matrix of centers for the given subset.
Eigen::MatrixXd center_matrix(const GaussianScene& scene,
                              const std::vector<uint32_t>& indices);

Eigen::Vector3f rgb_from_dc(const Eigen::Vector3f& dc);
Eigen::Vector3f dc_from_rgb(const Eigen::Vector3f& rgb);

// Scene restricted to the given primitive indices (order preserved).
GaussianScene subset_scene(const GaussianScene& scene, const std::vector<uint32_t>& indices);

}  // namespace splatsem::core
