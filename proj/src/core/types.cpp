// SPDX-License-Identifier: Apache-2.0
#include "splatsem/core/types.hpp"

#include <cmath>

#include "splatsem/common.hpp"

namespace splatsem::core {

Eigen::Vector4f normalize_quaternion(const Eigen::Vector4f& q) {
    double n2 = 0;
    for (int i = 0; i < 4; ++i) n2 += double(q[i]) * double(q[i]);
    if (n2 <= 0 || !std::isfinite(n2))
        throw ValidationError("cannot normalize zero or non-finite quaternion");
    if (std::abs(n2 - 1.0) <= 1e-6) return q;
    double inv = 1.0 / std::sqrt(n2);
    Eigen::Vector4f out;
    for (int i = 0; i < 4; ++i) out[i] = static_cast<float>(double(q[i]) * inv);
    return out;
}

void validate_primitive(const GaussianPrimitive& p, size_t index) {
    auto bad = [&](const char* what) {
        throw ValidationError(format_str("primitive %zu: %s", index, what));
    };
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(p.center[i])) bad("non-finite center");
        if (!std::isfinite(p.scale[i])) bad("non-finite scale");
        if (p.scale[i] <= 0.f) bad("non-positive scale");
    }
    for (int i = 0; i < 4; ++i)
        if (!std::isfinite(p.rotation[i])) bad("non-finite rotation");
    double n2 = double(p.rotation[0]) * p.rotation[0] + double(p.rotation[1]) * p.rotation[1] +
                double(p.rotation[2]) * p.rotation[2] + double(p.rotation[3]) * p.rotation[3];
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-6) bad("quaternion not unit norm");
    if (!std::isfinite(p.opacity)) bad("non-finite opacity");
    if (p.opacity < 0.f || p.opacity > 1.f) bad("opacity outside [0,1]");
    for (int i = 0; i < kColorShDim; ++i)
        if (!std::isfinite(p.color_sh[i])) bad("non-finite color coefficient");
}

void pack_attributes(const GaussianPrimitive& p, float* out) {
    out[0] = p.center[0];
    out[1] = p.center[1];
    out[2] = p.center[2];
    out[3] = p.scale[0];
    out[4] = p.scale[1];
    out[5] = p.scale[2];
    for (int i = 0; i < 4; ++i) out[kRotationOffset + i] = p.rotation[i];
    out[kOpacityOffset] = p.opacity;
    for (int i = 0; i < kColorShDim; ++i) out[kColorShOffset + i] = p.color_sh[i];
}

GaussianPrimitive unpack_attributes(const float* in) {
    GaussianPrimitive p;
    p.center = {in[0], in[1], in[2]};
    p.scale = {in[3], in[4], in[5]};
    for (int i = 0; i < 4; ++i) p.rotation[i] = in[kRotationOffset + i];
    p.opacity = in[kOpacityOffset];
    for (int i = 0; i < kColorShDim; ++i) p.color_sh[i] = in[kColorShOffset + i];
    return p;
}

Eigen::MatrixXd attribute_matrix(const GaussianScene& scene,
                                 const std::vector<uint32_t>& indices) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(indices.size()), kAttributeDim);
    float row[kAttributeDim];
    for (size_t r = 0; r < indices.size(); ++r) {
        pack_attributes(scene.primitives.at(indices[r]), row);
        for (int c = 0; c < kAttributeDim; ++c) m(static_cast<Eigen::Index>(r), c) = row[c];
    }
    return m;
}

Eigen::MatrixXd center_matrix(const GaussianScene& scene,
                              const std::vector<uint32_t>& indices) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(indices.size()), 3);
    for (size_t r = 0; r < indices.size(); ++r) {
        const auto& c = scene.primitives.at(indices[r]).center;
        m(static_cast<Eigen::Index>(r), 0) = c[0];
        m(static_cast<Eigen::Index>(r), 1) = c[1];
        m(static_cast<Eigen::Index>(r), 2) = c[2];
    }
    return m;
}

Eigen::Vector3f rgb_from_dc(const Eigen::Vector3f& dc) {
    return (Eigen::Vector3f::Constant(0.5f) + kShC0 * dc).cwiseMax(0.f).cwiseMin(1.f);
}

Eigen::Vector3f dc_from_rgb(const Eigen::Vector3f& rgb) {
    return (rgb - Eigen::Vector3f::Constant(0.5f)) / kShC0;
}

GaussianScene subset_scene(const GaussianScene& scene, const std::vector<uint32_t>& indices) {
    GaussianScene out;
    out.scene_id = scene.scene_id;
    out.source_meta = scene.source_meta;
    out.primitives.reserve(indices.size());
    for (uint32_t i : indices) out.primitives.push_back(scene.primitives.at(i));
    return out;
}

}  // namespace splatsem::core
