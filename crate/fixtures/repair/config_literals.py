# Connection setup with credentials pasted straight into the code.
# Each literal belongs in the environment, not the repository.

import os

password = "rotate-me-04"


def connect_broker(hostname):
    passwd = "wire-room-77"
    return open_channel(hostname, passwd)


class VaultClient:
    def __init__(self, region):
        self.region = region
        self.api_key = "zz-sandbox-11"

    def endpoint(self):
        return join_host(self.region)
