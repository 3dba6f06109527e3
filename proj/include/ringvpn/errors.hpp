#pragma once

#include <stdexcept>
#include <string>

namespace ringvpn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// transport / dataset
struct ParseError : Error {
  ParseError(const std::string& what, int line)
      : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
  int line;
};
struct DimensionError : Error {
  using Error::Error;
};
struct NoLinkError : Error {
  using Error::Error;
};

// overlay
struct AllBootstrapsUnreachableError : Error {
  using Error::Error;
};
struct NodeIdCollisionError : Error {
  using Error::Error;
};

// relays
struct NoOverlayPathError : Error {
  using Error::Error;
};
struct EmptyCandidatesError : Error {
  using Error::Error;
};
struct NoCandidateReachableError : Error {
  using Error::Error;
};

// vpn
struct SubnetExhaustedError : Error {
  using Error::Error;
};
struct NoGatewayAvailableError : Error {
  using Error::Error;
};
struct UnsupportedProtoError : Error {
  using Error::Error;
};

// groups
struct NameTakenError : Error {
  using Error::Error;
};
struct NotAdminError : Error {
  using Error::Error;
};
struct NotApprovedError : Error {
  using Error::Error;
};
struct BadSharedKeyError : Error {
  using Error::Error;
};
struct RevokedError : Error {
  using Error::Error;
};
struct UnknownUserError : Error {
  using Error::Error;
};
struct InsecureChannelError : Error {
  using Error::Error;
};
struct CertRejectedError : Error {
  using Error::Error;
};

// experiments
struct DatasetTooSmallError : Error {
  using Error::Error;
};

}  // namespace ringvpn
