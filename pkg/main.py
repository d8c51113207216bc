from dotenv import load_dotenv

from nesto.cli import main

load_dotenv()


if __name__ == "__main__":
    main()
