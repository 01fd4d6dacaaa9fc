#include "judgekit/gateway/provider.hpp"

#include "judgekit/detail/hash.hpp"

namespace judgekit::gateway {

std::uint64_t ChatRequest::content_hash() const {
  std::uint64_t h = detail::fnv1a64(model);
  for (const ChatMessage& message : messages) {
    h = detail::fnv1a64("\x1f", h);  // separator so (role, content) pairs can't bleed together
    h = detail::fnv1a64(message.role, h);
    h = detail::fnv1a64("\x1f", h);
    h = detail::fnv1a64(message.content, h);
  }
  return h;
}

}  // namespace judgekit::gateway
