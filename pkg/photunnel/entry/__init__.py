from .cli import cli as photunnelcli
