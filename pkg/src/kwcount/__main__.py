from kwcount.cli import main

main()
