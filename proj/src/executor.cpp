#include "firmchain/executor.hpp"

#include "firmchain/errors.hpp"

namespace firmchain {

ExecutionContext::ExecutionContext(Address caller, Address self,
                                   std::uint64_t block_number, bool read_only,
                                   const GasSchedule& schedule, NativeContract* contract)
    : caller_(caller),
      self_(self),
      block_number_(block_number),
      read_only_(read_only),
      schedule_(schedule),
      contract_(contract) {}

void ExecutionContext::write_slot(const std::string& key) {
  if (read_only_) throw RevertError(errid::read_only);
  auto [it, inserted] = contract_->written_slots.insert(key);
  (void)it;
  gas_ += inserted ? schedule_.storage_write_new : schedule_.storage_write_update;
}

void ExecutionContext::emit(Event ev) {
  if (read_only_) throw RevertError(errid::read_only);
  ev.emitter = self_;
  ev.block_number = block_number_;
  Bytes payload = ev.payload_bytes();
  gas_ += schedule_.log_gas(Event::kTopicCount, payload.size());
  events_.push_back(std::move(ev));
}

}  // namespace firmchain
