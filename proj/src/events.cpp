#include "events.hpp"

namespace ecdsim {

const char* source_kind_name(SourceKind k) {
  switch (k) {
    case SourceKind::LocalPool: return "local_pool";
    case SourceKind::RemotePool: return "remote_pool";
    case SourceKind::ContentServer: return "content_server";
    case SourceKind::Cloud: return "cloud";
  }
  return "unknown";
}

const char* effect_kind_name(EffectKind k) {
  switch (k) {
    case EffectKind::Promote: return "promote";
    case EffectKind::Demote: return "demote";
    case EffectKind::Evict: return "evict";
    case EffectKind::ReplicaDeliver: return "replica_deliver";
    case EffectKind::CloudDeliver: return "cloud_deliver";
    case EffectKind::CloudUpload: return "cloud_upload";
    case EffectKind::UserUpload: return "user_upload";
    case EffectKind::AdmitCopy: return "admit_copy";
    case EffectKind::RegisterDescription: return "register_description";
  }
  return "unknown";
}

}  // namespace ecdsim
