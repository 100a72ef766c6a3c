def main():
    """Run bellkit command line. Main entry point from command line."""
    import sys

    from bellkit import app

    sys.exit(app.run())


if __name__ == "__main__":
    main()
