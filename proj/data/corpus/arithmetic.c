int main(){
    int i, n, r, n1, j, n2, count = 0;
    while(scanf("%d %d", &n1, &n2) == 2){
        n = n1 + n2;
        count = 0;
        while(n != 0){
            r = n % 10;
            count++;
            n = n / 10;
        }
        printf("%d\n", count);
    }
    return 0;
}
