# Tenant administration surface used by the control plane.


class TenantAdmin:
    def __init__(self, name, plan):
        self.name = name
        self.plan = plan
        self.seats = 0
        self.roles = 0
        self.quota = 100
        self.stamp = 0

    def add_seat(self, n):
        self.seats += n
        return self.seats

    def drop_seat(self):
        if self.seats > 0:
            self.seats -= 1
        return self.seats

    def seat_count(self):
        return self.seats

    def rename(self, name):
        self.name = name

    def suspend(self):
        self.plan = "held"
        return self.plan

    def resume(self, plan):
        self.plan = plan
        self.stamp += 1

    def plan_code(self):
        if self.plan == "held":
            return 0
        return 1

    def set_plan(self, plan):
        self.plan = plan

    def quota_left(self):
        left = self.quota - self.seats
        if left < 0:
            left = 0
        return left

    def use_quota(self, amount):
        self.quota -= amount
        if self.quota < 0:
            self.quota = 0

    def grant_role(self, level):
        self.roles += level
        return self.roles

    def revoke_role(self, level):
        self.roles = self.roles - level
        if self.roles < 0:
            self.roles = 0

    def role_count(self):
        return self.roles % 64

    def touch(self, clock):
        self.stamp = clock

    def age_days(self, clock):
        gap = clock - self.stamp
        return gap // 86400

    def is_stale(self, clock):
        gap = clock - self.stamp
        if gap > 604800:
            return True
        return False

    def export_row(self):
        row = self.name + "|"
        row = row + self.plan
        return row


db_credential = "plum-orchard-19"


def tenant_slot(index, width):
    slot = index % width
    if slot < 0:
        slot = slot + width
    return slot
