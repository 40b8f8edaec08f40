#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace softarm {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// 24-value geometric signal: 12 spring lengths (mm) followed by
/// 12 IMU Euler angles (deg) as (yaw,pitch,roll) x {mid A, mid B, end A, end B}.
using SensorVec = Eigen::Matrix<double, 24, 1>;

constexpr int kNumChambers = 6;
constexpr int kNumSprings = 12;
constexpr int kNumImuChannels = 12;
constexpr int kSensorDim = 24;

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

/// Rigid transform with explicit rotation/translation. Translation in mm.
struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static RigidTransform identity() { return {}; }

  RigidTransform operator*(const RigidTransform& rhs) const {
    return {rotation * rhs.rotation, rotation * rhs.translation + translation};
  }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

  RigidTransform inverse() const {
    Mat3 rt = rotation.transpose();
    return {rt, -(rt * translation)};
  }

  /// Frobenius departure from orthonormality; 0 for a clean rotation.
  double orthonormality_error() const {
    return (rotation.transpose() * rotation - Mat3::Identity()).norm();
  }
};

inline RigidTransform translate_z(double dz) {
  return {Mat3::Identity(), Vec3(0.0, 0.0, dz)};
}

/// End-effector state: translation in mm, ZYX-intrinsic Euler angles in degrees.
struct Pose {
  double x = 0.0, y = 0.0, z = 0.0;
  double yaw = 0.0, pitch = 0.0, roll = 0.0;

  Vec3 translation() const { return {x, y, z}; }
  Vec3 angles_deg() const { return {yaw, pitch, roll}; }

  Vec6 as_vector() const {
    Vec6 v;
    v << x, y, z, yaw, pitch, roll;
    return v;
  }

  static Pose from_vector(const Vec6& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  }
};

}  // namespace softarm
