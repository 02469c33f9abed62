from .entry import photunnelcli

if __name__ == '__main__':
    photunnelcli()
